#include "cli.hpp"

#include "cesaro/harness.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/spec_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cesaro::cli
{

namespace
{

struct Options {
    // shared
    std::uint64_t seed = SamplerConfig{}.rng_seed;
    int samples_per_radius = 0;
    int ladder_depth = 14;
    int refine_iters = 40;
    int nodes = 64;
    std::string out_path;
    std::string format;

    // norm
    std::string space = "zygmund";
    std::string fn;
    int dim = 1;
    int cap = 16;

    // apply
    std::string op;
    std::string g;
    std::string f;
    std::string coeffs;
    std::size_t length = 8;
    std::string at;

    // experiment
    std::string experiment;
    std::vector<double> radii;
    std::string expect;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

SamplerConfig sampler_from(const Options &o)
{
    SamplerConfig cfg;
    cfg.rng_seed = o.seed;
    cfg.directions_per_radius = o.samples_per_radius;
    cfg.ladder_depth = o.ladder_depth;
    cfg.refine_iters = o.refine_iters;
    return cfg;
}

// Inline JSON (leading '{'), a path to a JSON file, or a preset name.
FunctionSpec resolve_spec(const std::string &text, std::size_t dim, int cap)
{
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_function_spec_text(text);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_function_spec_text(buf.str());
    }
    return preset(text, dim, cap);
}

TruncatedSeries require_series(const FunctionSpec &spec, const char *role)
{
    if (const auto *s = std::get_if<TruncatedSeries>(&spec)) {
        return *s;
    }
    throw SpecError(std::string(role) + " must be a series for the coefficient path; pass --at to evaluate "
                    + "the image pointwise instead");
}

void emit(const Options &o, std::ostream &out, const std::string &text)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file " + o.out_path);
    }
    file << text;
}

std::string argmax_text(const BallPoint &z)
{
    std::string s;
    for (std::size_t j = 0; j < z.dim(); ++j) {
        if (j) {
            s += ';';
        }
        s += format_double(z[j].real()) + (z[j].imag() < 0 ? "" : "+") + format_double(z[j].imag()) + "i";
    }
    return s;
}

int cmd_norm(const Options &o, std::ostream &out)
{
    const auto space = parse_space(o.space);
    if (!space) {
        throw UsageError("unknown space '" + o.space + "' (hinf|bloch|logbloch|zygmund)");
    }
    if (o.fn.empty()) {
        throw UsageError("norm needs --fn");
    }
    const FunctionSpec spec = resolve_spec(o.fn, o.dim, o.cap);
    const NormEstimate est = estimate(*space, to_evaluable(spec), sampler_from(o));
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["objective"] = to_string(*space);
        j["value"] = est.value;
        auto &arg = j["argmax"] = nlohmann::ordered_json::array();
        for (const auto &c : est.argmax.coords()) {
            arg.push_back(complex_to_json(c));
        }
        j["samples_used"] = est.samples_used;
        j["refined"] = est.refined;
        j["seed"] = o.seed;
        emit(o, out, j.dump(2) + "\n");
    } else {
        ExperimentReport table;
        table.columns = {"objective", "value", "argmax_coords", "samples_used", "refined", "seed"};
        table.add_row({std::string(to_string(*space)), est.value, argmax_text(est.argmax),
                       static_cast<long long>(est.samples_used), static_cast<long long>(est.refined),
                       static_cast<long long>(o.seed)});
        emit(o, out, table.to_csv());
    }
    return 0;
}

int cmd_apply(const Options &o, std::ostream &out)
{
    if (o.op == "cesaro") {
        if (o.coeffs.empty()) {
            throw UsageError("cesaro needs --coeffs");
        }
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(o.coeffs);
        } catch (const nlohmann::json::parse_error &e) {
            throw SpecError(std::string("JSON parse error: ") + e.what());
        }
        const Vector b = classical_cesaro(parse_complex_list(parsed), std::max(o.length, parsed.size()));
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto &c : b) {
            j.push_back(complex_to_json(c));
        }
        emit(o, out, j.dump() + "\n");
        return 0;
    }
    if (o.op != "tg" && o.op != "ig" && o.op != "mg") {
        throw UsageError("unknown operator '" + o.op + "' (tg|ig|mg|cesaro)");
    }
    if (o.g.empty() || o.f.empty()) {
        throw UsageError("apply needs --g and --f");
    }
    const FunctionSpec gs = resolve_spec(o.g, o.dim, o.cap);
    const FunctionSpec fs = resolve_spec(o.f, spec_dim(gs), o.cap);

    if (!o.at.empty()) {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(o.at);
        } catch (const nlohmann::json::parse_error &e) {
            throw SpecError(std::string("JSON parse error: ") + e.what());
        }
        const BallPoint z(parse_complex_list(parsed));
        const Evaluable g = to_evaluable(gs);
        const Evaluable f = to_evaluable(fs);
        cplx value;
        if (o.op == "tg") {
            value = quadrature_T(g, f, z, o.nodes);
        } else if (o.op == "ig") {
            value = quadrature_I(g, f, z, o.nodes);
        } else {
            value = pointwise_M(g, f)(z);
        }
        nlohmann::ordered_json j;
        j["op"] = o.op;
        j["value"] = complex_to_json(value);
        emit(o, out, j.dump() + "\n");
        return 0;
    }

    const TruncatedSeries g = require_series(gs, "--g");
    const TruncatedSeries f = require_series(fs, "--f");
    TruncatedSeries result = o.op == "tg" ? apply_T(g, f) : o.op == "ig" ? apply_I(g, f) : apply_M(g, f);
    emit(o, out, series_to_json(result).dump() + "\n");
    return 0;
}

int cmd_experiment(const Options &o, std::ostream &out, std::ostream &err)
{
    HarnessConfig cfg;
    cfg.sampler = sampler_from(o);
    cfg.quadrature_nodes = o.nodes;
    const std::size_t n = static_cast<std::size_t>(o.dim);

    auto radii_or = [&](std::vector<double> fallback) { return o.radii.empty() ? fallback : o.radii; };
    auto g_or = [&](const std::string &fallback) { return o.g.empty() ? fallback : o.g; };

    ExperimentReport rep;
    if (o.experiment == "theorem1") {
        const std::string gname = g_or("z1");
        cfg.params["g"] = gname;
        const TruncatedSeries g = require_series(resolve_spec(gname, n, o.cap), "--g");
        rep = theorem1_experiment(g, standard_family(g.dim(), o.seed, cfg.sampler), cfg);
    } else if (o.experiment == "theorem2") {
        const std::string gname = g_or("log-kernel");
        std::string expect = o.expect;
        if (expect.empty()) {
            expect = gname == "log-kernel" ? "divergent" : "bounded";
        }
        if (expect != "bounded" && expect != "divergent") {
            throw UsageError("--expect must be bounded or divergent");
        }
        cfg.params["g"] = gname;
        const FunctionSpec gs = resolve_spec(gname, n, o.cap);
        std::vector<BallPoint> grid;
        for (double r : radii_or({0.9, 0.99, 0.999, 0.9999})) {
            Vector a(spec_dim(gs), 0.0);
            a[0] = r;
            grid.emplace_back(std::move(a));
        }
        rep = theorem2_experiment(to_evaluable(gs), grid,
                                  expect == "bounded" ? GrowthExpectation::Bounded : GrowthExpectation::Divergent, cfg);
    } else if (o.experiment == "theorem3") {
        const std::string gname = g_or("one");
        cfg.params["g"] = gname;
        rep = theorem3_experiment(to_evaluable(resolve_spec(gname, n, o.cap)), radii_or({0.9, 0.99, 0.999}), cfg);
    } else if (o.experiment == "corollary") {
        const std::string gname = g_or("random-poly(7,4)");
        cfg.params["g"] = gname;
        const TruncatedSeries g = require_series(resolve_spec(gname, n, o.cap), "--g");
        rep = corollary_experiment(g, standard_family(g.dim(), o.seed, cfg.sampler), cfg);
    } else if (o.experiment == "probes") {
        rep = elementary_probes(cfg);
    } else {
        throw UsageError("unknown experiment '" + o.experiment + "' (theorem1|theorem2|theorem3|corollary|probes)");
    }

    emit(o, out, o.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n");
    for (const auto &[name, pass] : rep.verdicts) {
        err << rep.experiment << ' ' << name << ": " << (pass ? "pass" : "FAIL") << '\n';
    }
    for (const auto &note : rep.notes) {
        err << "note: " << note << '\n';
    }
    return rep.passed() ? 0 : 1;
}

void add_shared(CLI::App *cmd, Options &o, const std::string &default_format)
{
    cmd->add_option("--seed", o.seed, "RNG seed for the direction sampler")->capture_default_str();
    cmd->add_option("--samples-per-radius", o.samples_per_radius,
                    "Directions per ladder radius (0: 512 angles for n=1, 256 random for n>1)")
        ->capture_default_str();
    cmd->add_option("--ladder-depth", o.ladder_depth, "Radii r_j = 1 - 2^-j, j = 1..depth")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
    cmd->add_option("--refine-iters", o.refine_iters, "Golden-section iterations along the best ray")
        ->capture_default_str();
    cmd->add_option("--nodes", o.nodes, "Gauss-Legendre nodes for the t-integrals")
        ->check(CLI::Range(16, 4096))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str(default_format);
    cmd->add_option("--dim", o.dim, "Ambient dimension n for presets")->check(CLI::Range(1, 16))->capture_default_str();
    cmd->add_option("--cap", o.cap, "Degree cap for series presets")->check(CLI::Range(0, 4096))->capture_default_str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Numerical lab for extended Cesaro operators on Zygmund spaces of the unit ball"};
    app.require_subcommand(1);

    auto *norm = app.add_subcommand("norm", "Estimate a norm or seminorm of one function");
    add_shared(norm, o, "csv");
    norm->add_option("--space", o.space, "hinf|bloch|logbloch|zygmund")
        ->check(CLI::IsMember({"hinf", "bloch", "logbloch", "zygmund"}))
        ->capture_default_str();
    norm->add_option("--fn", o.fn, "Function: inline JSON, JSON file, or preset")->required();

    auto *apply = app.add_subcommand("apply", "Apply T_g, I_g, M_g (coefficient space) or the classical Cesaro map");
    add_shared(apply, o, "json");
    apply->add_option("--op", o.op, "tg|ig|mg|cesaro")->required();
    apply->add_option("--g", o.g, "Symbol g: inline JSON, JSON file, or preset");
    apply->add_option("--f", o.f, "Operand f: inline JSON, JSON file, or preset");
    apply->add_option("--coeffs", o.coeffs, "cesaro: JSON list of Taylor coefficients");
    apply->add_option("--length", o.length, "cesaro: number of output coefficients")->capture_default_str();
    apply->add_option("--at", o.at,
                      "Evaluate the image at this point ([[re,im],...]) by quadrature; needed when g or f is not a "
                      "series");

    auto *exp = app.add_subcommand("experiment", "Run a boundedness/compactness experiment");
    add_shared(exp, o, "json");
    exp->add_option("name", o.experiment, "theorem1|theorem2|theorem3|corollary|probes")->required();
    exp->add_option("--g", o.g, "Symbol g: preset (one, zero, z<j>, log-kernel, random-poly(s,d), log-series(N)) or JSON");
    exp->add_option("--radii", o.radii, "Anchor radii, e.g. 0.9,0.99,0.999")->delimiter(',');
    exp->add_option("--expect", o.expect, "theorem2: bounded|divergent (default by preset)");
    exp->footer("CSV columns per experiment:\n"
                "  theorem1: section,label,k,input_norm,output_norm,ratio\n"
                "  theorem2: abs_a,zygmund_h_a,zygmund_Ig_h_a,zygmund_f_a,zygmund_Ig_f_a,ratio_f_a,lower_bound,\n"
                "            certificate,abs_g_a,log_bloch_term\n"
                "  theorem3: radius,zygmund_f_k,zygmund_Ig_f_k,lower_bound,certificate,R_f_k_at_zk,RR_f_k_at_zk,\n"
                "            RR_expected,sup_f_k_on_half_ball\n"
                "  corollary: label,zygmund_f,zygmund_Mg_f,ratio,identity_residual\n"
                "  probes: probe,parameter,value,reference");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (o.format.empty()) {
        o.format = norm->parsed() ? "csv" : "json";
    }
    try {
        if (norm->parsed()) {
            return cmd_norm(o, out);
        }
        if (apply->parsed()) {
            return cmd_apply(o, out);
        }
        return cmd_experiment(o, out, err);
    } catch (const SpecError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace cesaro::cli
