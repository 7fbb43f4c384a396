#include "apolab/cli.hpp"
#include "apolab/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace apolab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "apolab");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "apolab_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kCube = R"({"num_vars": 1, "degree": 3, "prime": 2147483647, "terms": [{"exp": [3], "coeff": 1}]})";

} // namespace

TEST_CASE("hvector subcommand") {
    const auto cube = write_file("cube.json", kCube);
    Run r = run({"hvector", cube.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("h-vector: 1,1,1,1") != std::string::npos);
    CHECK(r.out.find("type: 1") != std::string::npos);

    const auto fam = scratch("family.json");
    CHECK(run({"--out", fam.string(), "construct", "remark5", "--t", "2", "--p", "2", "--e", "4"}).code == 0);
    r = run({"hvector", fam.string()});
    CHECK(r.out.find("h-vector: 1,6,6,6,2") != std::string::npos);

    r = run({"--format", "structured", "hvector", fam.string()});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["hvector"] == nlohmann::json({1, 6, 6, 6, 2}));
    CHECK(doc["type"] == 2);
    CHECK(doc["ranks"].size() == 5);

    const auto bad = write_file("bad.json", R"({"num_vars": 2, "degree": 3, "prime": 2147483647,
        "terms": [{"exp": [3], "coeff": 1}]})");
    r = run({"hvector", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);
    CHECK(r.err.find("$.terms[0].exp") != std::string::npos);

    const auto dep = write_file("dep.json", R"({"num_vars": 1, "degree": 2, "prime": 2147483647,
        "generators": [{"terms": [{"exp": [2], "coeff": 1}]}, {"terms": [{"exp": [2], "coeff": 3}]}]})");
    r = run({"hvector", dep.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("DependentGenerators") != std::string::npos);

    CHECK(run({"--prime", "7", "hvector", cube.string()}).code == 2);   // prime mismatch
    CHECK(run({"--prime", "10", "hvector", cube.string()}).code == 2);  // not prime
    CHECK(run({"hvector", "/nonexistent.json"}).code == 2);
}

TEST_CASE("bounds subcommand") {
    Run r = run({"bounds", "--h", "1,4,9,13,13,13,9,6,4", "--d", "6", "--c", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lower: 1,3,4,6,5,5,3\n") != std::string::npos);
    CHECK(r.out.find("upper: 1,4,9,13,13,12,3\n") != std::string::npos);
    CHECK(r.out.find("lower exact: 1,91/40,") != std::string::npos);

    Run s = run({"--format", "structured", "bounds", "--h", "1,4,9,13,13,13,9,6,4", "--d", "6", "--c", "3"});
    const auto doc = nlohmann::json::parse(s.out);
    CHECK(doc["lower"] == nlohmann::json({1, 3, 4, 6, 5, 5, 3}));
    CHECK(doc["upper"] == nlohmann::json({1, 4, 9, 13, 13, 12, 3}));
    CHECK(doc["lower_exact"][1] == "91/40");

    CHECK(run({"bounds", "--h", "1,4,9,13,13,13,9,6,4", "--d", "6", "--c", "10"}).code == 2);
    CHECK(run({"bounds", "--h", "1,4,x", "--d", "1", "--c", "1"}).code == 2);
    CHECK(run({"bounds", "--h", "1,4,9", "--d", "6", "--c", "1"}).code == 2);

    r = run({"bounds", "--h", "1,3,6,10,15,12,6,2", "--d", "7", "--c", "2"});
    CHECK(r.out.find("lower: 1,3,6,10,15,12,6,2\n") != std::string::npos);

    r = run({"bounds", "--h", "1,3,3,1,2", "--d", "3", "--c", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("note: h_d = 1") != std::string::npos);
    CHECK(r.out.find("lower: 1,3,3,1\n") != std::string::npos);
}

TEST_CASE("quotient and truncate subcommands") {
    const auto fam = scratch("family2.json");
    REQUIRE(run({"--out", fam.string(), "construct", "remark5", "--t", "2", "--p", "2", "--e", "4"}).code == 0);
    for (const char* seed : {"1", "2", "77"}) {
        Run r = run({"--seed", seed, "quotient", fam.string(), "--d", "4", "--c", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("quotient H: 1,4,4,4,1\n") != std::string::npos);
        CHECK(r.out.find("within bounds: yes") != std::string::npos);
    }
    Run full = run({"quotient", fam.string(), "--d", "4", "--c", "2"});
    CHECK(full.out.find("quotient H: 1,6,6,6,2\n") != std::string::npos);
    CHECK(run({"quotient", fam.string(), "--d", "4", "--c", "3"}).code == 2);

    const auto sept = scratch("septics.json");
    REQUIRE(run({"--out", sept.string(), "construct", "septics"}).code == 0);
    const auto doc = nlohmann::json::parse(slurp(sept));
    const auto amb = write_file("septics_ambient.json", doc["ambient"].dump());
    Run s1 = run({"--seed", "1", "quotient", amb.string(), "--d", "6", "--c", "2"});
    Run s2 = run({"--seed", "2", "quotient", amb.string(), "--d", "6", "--c", "2"});
    CHECK(s1.code == 0);
    CHECK(s1.out.find("quotient H: 1,3,6,10,12,6,2\n") != std::string::npos);
    CHECK(s1.out == s2.out);

    const auto trunc = scratch("trunc.json");
    REQUIRE(run({"--out", trunc.string(), "truncate", fam.string(), "--d", "3"}).code == 0);
    Run h = run({"hvector", trunc.string()});
    CHECK(h.out.find("h-vector: 1,6,6,6\n") != std::string::npos);
}

TEST_CASE("construct subcommands") {
    Run r = run({"construct", "compressed-h", "--vars", "3", "--degree", "7", "--type", "2"});
    CHECK(r.out == "h-vector: 1,3,6,10,15,12,6,2\n");

    const auto pair = scratch("pair.json");
    REQUIRE(run({"--out", pair.string(), "construct", "remark6", "--t", "2", "--p", "2", "--e", "4"}).code == 0);
    const auto doc = nlohmann::json::parse(slurp(pair));
    const auto a2 = write_file("a2.json", doc["A2"].dump());
    const auto q2 = write_file("q2.json", doc["A2_designated_quotient"].dump());
    CHECK(run({"hvector", a2.string()}).out.find("1,6,6,6,2") != std::string::npos);
    CHECK(run({"hvector", q2.string()}).out.find("1,5,5,5,1") != std::string::npos);
    CHECK(run({"construct", "remark6", "--t", "1"}).code == 2);

    const auto ps = scratch("ps.json");
    REQUIRE(run({"--out", ps.string(), "construct", "powersum", "--vars", "4", "--degree", "3", "--summands", "3"})
                .code == 0);
    CHECK(run({"hvector", ps.string()}).out.find("h-vector: 1,3,3,1") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    Run r = run({"verify", "--suite", "example4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite example4: 2/2 checks passed") != std::string::npos);
    CHECK(run({"verify", "--suite", "remark6"}).code == 0);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("a broken lower bound fails verification at its first bad index") {
    VerifyContext ctx{PrimeField(), 1};
    ctx.lower = [](const HVector& h, unsigned d, std::uint64_t c) {
        LowerBound lb = lower_bound(h, d, c);
        if (lb.ceiling.size() > 2) lb.ceiling[2] += 1;
        return lb;
    };
    const VerifyReport report = verify_example4(ctx);
    CHECK_FALSE(report.pass());
    REQUIRE(report.first_failure() != nullptr);
    CHECK(report.first_failure()->detail.find("index 2") != std::string::npos);

    const VerifyReport r5 = verify_remark5(ctx);
    CHECK_FALSE(r5.pass());
}

TEST_CASE("sweep subcommand is deterministic") {
    const auto a = scratch("sweep_a.csv");
    const auto b = scratch("sweep_b.csv");
    const std::vector<std::string> grid{"sweep", "--r", "1..3", "--e", "1..4", "--t", "1..2", "--trials", "2"};
    auto with_out = [&](const fs::path& p) {
        std::vector<std::string> args{"--seed", "11", "--out", p.string()};
        args.insert(args.end(), grid.begin(), grid.end());
        return run(args);
    };
    Run ra = with_out(a);
    Run rb = with_out(b);
    CHECK(ra.code == 0);
    CHECK(rb.code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(ra.out.find("violations 0") != std::string::npos);

    const auto empty = scratch("sweep_empty.csv");
    CHECK(run({"--out", empty.string(), "sweep", "--r", "2..1"}).code == 0);
    CHECK(slurp(empty) == "r,e,t,d,c,seed,ambient_h,quotient_H,lower_int,upper,within,lower_gap,upper_gap\n");
    CHECK(run({"sweep", "--r", "x"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bounds", "--h", "1,2,1"}).code == 2);
    CHECK(run({"--format", "xml", "verify"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
