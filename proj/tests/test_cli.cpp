#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cesaro::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("norm of z^2")
{
    const auto r = run({"norm", "--space", "zygmund", "--fn", R"({"kind":"series","dim":1,"cap":2,"terms":[[[2],1,0]]})",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["value"].get<double>() - 1.0) < 1e-4);
    CHECK(j["seed"] == 20240601);
}

TEST_CASE("norm of a constant vanishes in the seminorms")
{
    for (const char *space : {"bloch", "logbloch"}) {
        const auto r = run({"norm", "--space", space, "--fn", "one", "--format", "json"});
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["value"] == 0.0);
    }
    const auto r = run({"norm", "--space", "hinf", "--fn", "one", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["value"] == 1.0);
}

TEST_CASE("malformed input exits with 2")
{
    const auto bad_json = run({"norm", "--space", "zygmund", "--fn", "{bad"});
    CHECK(bad_json.code == 2);
    CHECK(bad_json.err.find("parse error") != std::string::npos);

    CHECK(run({"norm", "--space", "sobolev", "--fn", "one"}).code == 2);
    CHECK(run({"norm", "--space", "zygmund", "--fn", R"({"kind":"series","dim":1,"cap":2,"extra":1,"terms":[]})"}).code == 2);
    CHECK(run({"norm", "--space", "zygmund", "--fn", "no-such-preset"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"apply", "--op", "tg", "--g", "log-kernel", "--f", "z1"}).code == 2);
}

TEST_CASE("apply examples")
{
    const auto tg = run({"apply", "--op", "tg", "--g", "z1", "--f", "z1", "--cap", "4"});
    REQUIRE(tg.code == 0);
    CHECK(nlohmann::json::parse(tg.out)["terms"] == nlohmann::json::parse("[[[2],0.5,0.0]]"));

    const auto ig = run({"apply", "--op", "ig", "--g", "one", "--f",
                         R"({"kind":"series","dim":1,"cap":3,"terms":[[[0],2,0],[[2],1,1]]})"});
    REQUIRE(ig.code == 0);
    CHECK(nlohmann::json::parse(ig.out)["terms"] == nlohmann::json::parse("[[[2],1.0,1.0]]"));

    const auto ces = run({"apply", "--op", "cesaro", "--coeffs", "[1]", "--length", "4"});
    REQUIRE(ces.code == 0);
    const auto b = nlohmann::json::parse(ces.out);
    REQUIRE(b.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(b[j][0].get<double>() == doctest::Approx(1.0 / (j + 1.0)).epsilon(1e-15));
    }
}

TEST_CASE("experiments")
{
    const auto t3 = run({"experiment", "theorem3", "--g", "one", "--radii", "0.9,0.99,0.999", "--dim", "2"});
    CHECK(t3.code == 0);
    CHECK(t3.err.find("non_compactness_witness: pass") != std::string::npos);

    const auto t2 = run({"experiment", "theorem2", "--g", "log-kernel", "--radii", "0.9,0.99,0.999,0.9999", "--format",
                         "json"});
    CHECK(t2.code == 0);
    const auto j = nlohmann::json::parse(t2.out);
    CHECK(j["passed"] == true);

    const auto pr = run({"experiment", "probes", "--format", "csv"});
    CHECK(pr.code == 0);
    CHECK(pr.out.find("sqrt_log_max") != std::string::npos);
    CHECK(pr.err.find("note:") != std::string::npos);

    CHECK(run({"experiment", "theorem1", "--g", "z1"}).code == 0);
    CHECK(run({"experiment", "corollary", "--g", "random-poly(3,4)", "--dim", "2"}).code == 0);
}

TEST_CASE("failing verdicts exit with 1")
{
    // a polynomial symbol does not show divergent growth
    CHECK(run({"experiment", "theorem2", "--g", "z1", "--radii", "0.9,0.99,0.9999", "--expect", "divergent"}).code == 1);
}

TEST_CASE("output files are byte-identical across runs")
{
    const auto dir = std::filesystem::temp_directory_path() / "cesaro_cli_test";
    std::filesystem::create_directories(dir);
    for (const char *fmt : {"csv", "json"}) {
        const auto a = dir / (std::string("a.") + fmt);
        const auto b = dir / (std::string("b.") + fmt);
        for (const auto &p : {a, b}) {
            REQUIRE(run({"experiment", "theorem3", "--g", "log-kernel", "--radii", "0.9,0.99", "--format", fmt, "--out",
                         p.string()})
                        .code
                    == 0);
        }
        const std::string sa = slurp(a);
        CHECK(!sa.empty());
        CHECK(sa == slurp(b));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("default formats per command")
{
    const auto norm = run({"norm", "--space", "bloch", "--fn", "z1"});
    REQUIRE(norm.code == 0);
    CHECK(norm.out.rfind("objective,value,argmax_coords,samples_used,refined,seed\n", 0) == 0);

    const auto exp = run({"experiment", "theorem3", "--g", "one", "--radii", "0.9"});
    REQUIRE(exp.code == 0);
    CHECK(nlohmann::json::parse(exp.out)["experiment"] == "theorem3");
}
