#include "cesaro/spec_io.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>

namespace cesaro
{

namespace
{

void reject_unknown_keys(const nlohmann::json &j, const std::set<std::string> &allowed)
{
    for (const auto &[key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw SpecError("unknown key '" + key + "' in function spec");
        }
    }
}

const nlohmann::json &field(const nlohmann::json &j, const char *name)
{
    if (!j.contains(name)) {
        throw SpecError(std::string("function spec is missing '") + name + "'");
    }
    return j.at(name);
}

int as_int(const nlohmann::json &j, const char *what)
{
    if (!j.is_number_integer()) {
        throw SpecError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

double as_real(const nlohmann::json &j, const char *what)
{
    if (!j.is_number()) {
        throw SpecError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

void enumerate(std::size_t n, int degree, std::vector<int> &prefix, int used, std::vector<MultiIndex> &out)
{
    if (prefix.size() == n) {
        out.emplace_back(prefix);
        return;
    }
    for (int e = 0; e + used <= degree; ++e) {
        prefix.push_back(e);
        enumerate(n, degree, prefix, used + e, out);
        prefix.pop_back();
    }
}

} // namespace

cplx parse_complex(const nlohmann::json &j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2) {
        return {as_real(j[0], "real part"), as_real(j[1], "imaginary part")};
    }
    throw SpecError("complex number must be [re, im] or a real number");
}

Vector parse_complex_list(const nlohmann::json &j)
{
    if (!j.is_array()) {
        throw SpecError("expected a list of complex numbers");
    }
    Vector out;
    for (const auto &x : j) {
        out.push_back(parse_complex(x));
    }
    return out;
}

nlohmann::ordered_json complex_to_json(cplx c)
{
    return nlohmann::ordered_json::array({c.real(), c.imag()});
}

TruncatedSeries parse_series(const nlohmann::json &j)
{
    reject_unknown_keys(j, {"kind", "dim", "cap", "terms"});
    const int dim = as_int(field(j, "dim"), "dim");
    const int cap = as_int(field(j, "cap"), "cap");
    if (dim < 1 || cap < 0) {
        throw SpecError("series needs dim >= 1 and cap >= 0");
    }
    const auto &terms = field(j, "terms");
    if (!terms.is_array()) {
        throw SpecError("series terms must be a list");
    }
    std::vector<TruncatedSeries::Term> parsed;
    for (const auto &t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_array()) {
            throw SpecError("series term must be [[i1,...,in], re, im]");
        }
        std::vector<int> idx;
        for (const auto &e : t[0]) {
            idx.push_back(as_int(e, "multi-index entry"));
        }
        try {
            parsed.emplace_back(MultiIndex(idx), cplx(as_real(t[1], "re"), as_real(t[2], "im")));
        } catch (const SpecError &) {
            throw;
        } catch (const Error &e) {
            throw SpecError(e.what());
        }
    }
    try {
        return TruncatedSeries::make(dim, cap, parsed);
    } catch (const Error &e) {
        throw SpecError(e.what());
    }
}

nlohmann::ordered_json series_to_json(const TruncatedSeries &s)
{
    nlohmann::ordered_json j;
    j["kind"] = "series";
    j["dim"] = s.dim();
    j["cap"] = s.cap();
    auto &terms = j["terms"] = nlohmann::ordered_json::array();
    for (const auto &[alpha, c] : s.terms()) {
        terms.push_back(nlohmann::ordered_json::array({alpha.entries(), c.real(), c.imag()}));
    }
    return j;
}

FunctionSpec parse_function_spec(const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw SpecError("function spec must be a JSON object");
    }
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw SpecError("function spec needs a string 'kind'");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "series") {
        return parse_series(j);
    }
    reject_unknown_keys(j, {"kind", "a"});
    const Vector a = parse_complex_list(field(j, "a"));
    try {
        if (kind == "log_kernel") {
            return log_kernel(a);
        }
        if (kind == "h_a") {
            return h_a(BallPoint(a));
        }
        if (kind == "f_a") {
            return f_a(BallPoint(a));
        }
        if (kind == "f_k") {
            return f_k(BallPoint(a));
        }
    } catch (const SpecError &) {
        throw;
    } catch (const Error &e) {
        throw SpecError(e.what());
    }
    throw SpecError("unknown function kind '" + kind + "'");
}

FunctionSpec parse_function_spec_text(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw SpecError(std::string("JSON parse error: ") + e.what());
    }
    return parse_function_spec(j);
}

Evaluable to_evaluable(const FunctionSpec &spec)
{
    return std::visit([](const auto &f) { return Evaluable::from(f); }, spec);
}

std::size_t spec_dim(const FunctionSpec &spec)
{
    return std::visit([](const auto &f) { return static_cast<std::size_t>(f.dim()); }, spec);
}

std::vector<MultiIndex> multi_indices(std::size_t n, int degree)
{
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate(n, degree, prefix, 0, out);
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
}

TruncatedSeries random_polynomial(std::size_t n, int degree, std::uint64_t seed, int cap)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<TruncatedSeries::Term> terms;
    for (auto &alpha : multi_indices(n, degree)) {
        const double re = unit(rng);
        const double im = unit(rng);
        terms.emplace_back(std::move(alpha), cplx(re, im));
    }
    return TruncatedSeries::make(static_cast<int>(n), cap < 0 ? degree : cap, terms);
}

FunctionSpec preset(std::string_view name, std::size_t n, int cap)
{
    const std::string s(name);
    const int dim = static_cast<int>(n);
    if (s == "one") {
        return TruncatedSeries::constant(dim, cap, 1.0);
    }
    if (s == "zero") {
        return TruncatedSeries(dim, cap);
    }
    if (s == "log-kernel") {
        Vector e1(n, 0.0);
        e1[0] = 1.0;
        return log_kernel(e1);
    }
    std::smatch m;
    static const std::regex coordinate(R"(z(\d+))");
    if (std::regex_match(s, m, coordinate)) {
        const std::size_t j = std::stoul(m[1]);
        if (j < 1 || j > n) {
            throw SpecError("coordinate preset out of range: " + s);
        }
        return TruncatedSeries::monomial(dim, std::max(cap, 1), j - 1, 1);
    }
    static const std::regex random_poly(R"(random-poly\((\d+),(\d+)\))");
    if (std::regex_match(s, m, random_poly)) {
        const auto seed = std::stoull(m[1]);
        const int degree = std::stoi(m[2]);
        return random_polynomial(n, degree, seed, std::max(cap, degree));
    }
    static const std::regex log_series(R"(log-series\((\d+)\))");
    if (std::regex_match(s, m, log_series)) {
        // log(1/(1 - z_1)) = sum_m z_1^m / m, truncated
        const int degree = std::stoi(m[1]);
        std::vector<TruncatedSeries::Term> terms;
        for (int k = 1; k <= degree; ++k) {
            terms.emplace_back(MultiIndex::unit(n, 0, k), 1.0 / k);
        }
        return TruncatedSeries::make(dim, std::max(cap, degree), terms);
    }
    throw SpecError("unknown preset '" + s + "'");
}

} // namespace cesaro
