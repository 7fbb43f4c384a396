#include "apolab/errors.hpp"
#include "apolab/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace apolab;

TEST_CASE("range parsing") {
    CHECK(IntRange::parse("3").lo == 3);
    CHECK(IntRange::parse("3").hi == 3);
    const IntRange r = IntRange::parse("1..4");
    CHECK(r.lo == 1);
    CHECK(r.hi == 4);
    CHECK(IntRange::parse("5..2").empty());
    CHECK_THROWS_AS(IntRange::parse("a..2"), Error);
    CHECK_THROWS_AS(IntRange::parse(""), Error);
}

TEST_CASE("empty range writes the header only") {
    const PrimeField F;
    SweepConfig cfg;
    cfg.num_vars = IntRange::parse("3..2");
    const SweepResult result = run_sweep(F, cfg);
    CHECK(result.records.empty());
    std::ostringstream os;
    write_sweep_csv(os, result.records);
    CHECK(os.str() == std::string(kSweepHeader) + "\n");
}

TEST_CASE("one variable: every algebra is (1, ..., 1)") {
    const PrimeField F;
    SweepConfig cfg;
    cfg.num_vars = {1, 1};
    cfg.socle_degree = {1, 5};
    cfg.type = {1, 2};
    cfg.trials = 3;
    const SweepResult result = run_sweep(F, cfg);
    CHECK_FALSE(result.records.empty());
    CHECK(result.skipped.size() == 15); // t = 2 cannot fit in one variable
    for (const auto& rec : result.records) {
        CHECK(rec.ambient_h.entries == std::vector<std::uint64_t>(rec.e + 1, 1));
        CHECK(rec.quotient_h.entries == std::vector<std::uint64_t>(rec.d + 1, 1));
        CHECK(rec.lower_int == rec.upper);
        CHECK(rec.within);
    }
}

TEST_CASE("column ceiling skips with a reason") {
    const PrimeField F;
    SweepConfig cfg;
    cfg.num_vars = {4, 4};
    cfg.socle_degree = {6, 6};
    cfg.type = {1, 1};
    cfg.trials = 1;
    cfg.max_cols = 50;
    const SweepResult result = run_sweep(F, cfg);
    CHECK(result.records.empty());
    REQUIRE(result.skipped.size() == 1);
    CHECK(result.skipped[0].find("84 columns") != std::string::npos);
}

TEST_CASE("records are consistent and thread-count independent") {
    const PrimeField F;
    SweepConfig cfg;
    cfg.num_vars = {2, 3};
    cfg.socle_degree = {2, 4};
    cfg.type = {1, 2};
    cfg.trials = 3;
    cfg.seed = 9;
    cfg.threads = 1;
    const SweepResult serial = run_sweep(F, cfg);
    cfg.threads = 4;
    const SweepResult parallel = run_sweep(F, cfg);
    std::ostringstream a, b;
    write_sweep_csv(a, serial.records);
    write_sweep_csv(b, parallel.records);
    CHECK(a.str() == b.str());
    for (const auto& rec : serial.records) {
        CHECK(rec.within);
        CHECK(rec.quotient_h.size() == rec.d + 1);
        CHECK(rec.quotient_h[rec.d] == rec.c);
        CHECK(rec.lower_gap.size() == rec.d);
        for (auto g : rec.lower_gap) CHECK(g >= 0);
        for (auto g : rec.upper_gap) CHECK(g >= 0);
    }
    CHECK(sweep_summary(serial).find("violations 0") != std::string::npos);
}

TEST_CASE("negative gaps are written with a tilde") {
    SweepRecord rec;
    rec.r = 2;
    rec.e = 2;
    rec.t = 1;
    rec.d = 1;
    rec.c = 1;
    rec.ambient_h = HVector{{1, 2, 1}};
    rec.quotient_h = HVector{{1, 1}};
    rec.lower_int = {1, 2};
    rec.upper = {1, 2};
    rec.lower_gap = {-1};
    rec.upper_gap = {1};
    std::ostringstream os;
    write_sweep_csv(os, {rec});
    CHECK(os.str().find(",1-2,1-2,false,~1,1\n") != std::string::npos);
}
