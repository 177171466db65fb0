#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tobl/hardy.hpp"
#include "tobl/optimizer.hpp"
#include "tobl/reference_tables.hpp"

#include <stdexcept>

using namespace tobl;

#ifndef TOBL_DATA_DIR
#error "TOBL_DATA_DIR must point at the repository data directory"
#endif

namespace {

const std::string kDataDir = TOBL_DATA_DIR;

}  // namespace

TEST_CASE("canonical argument shapes")
{
    HardySpec tri = HardySpec::canonical(3);
    CHECK(tri.parties() == 3);
    CHECK(tri.zeros().size() == 4);

    HardySpec bi = HardySpec::canonical(2);
    CHECK(bi.parties() == 2);
    CHECK(bi.zeros().size() == 3);

    // The success event is never among the pinned zeros.
    for (const auto& z : tri.zeros())
        CHECK(!(z == tri.success()));
}

TEST_CASE("argument family sizes and uniqueness")
{
    auto tri = hardy_family(3);
    CHECK(tri.size() == 512);
    auto bi = hardy_family(2);
    CHECK(bi.size() == 64);

    bool found_canonical = false;
    for (const auto& spec : tri)
        if (spec.describe() == HardySpec::canonical(3).describe())
            found_canonical = true;
    CHECK(found_canonical);
}

TEST_CASE("degenerate argument parameters are rejected")
{
    CHECK_THROWS_AS(HardySpec(4, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(HardySpec(3, {0, 2, 0}, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(HardySpec(3, {0, 0}, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("spec files round-trip the canonical arguments")
{
    HardySpec tri = read_hardy_spec_file(kDataDir + "/canonical_tripartite_spec.json");
    CHECK(tri.describe() == HardySpec::canonical(3).describe());
    HardySpec bi = read_hardy_spec_file(kDataDir + "/canonical_bipartite_spec.json");
    CHECK(bi.describe() == HardySpec::canonical(2).describe());
}

TEST_CASE("the reference behavior witnesses the canonical argument at 1/4")
{
    HardyReport report = hardy_report(reference_behavior(), HardySpec::canonical(3));
    CHECK(report.witness);
    CHECK(report.q == Rational(1, 4));
    CHECK(report.zero_violations.empty());
}

TEST_CASE("a behavior missing a pinned zero is not a witness")
{
    Behavior uniform(3, RVector(64, Rational(1, 8)));
    HardyReport report = hardy_report(uniform, HardySpec::canonical(3));
    CHECK(!report.witness);
    CHECK(report.q == Rational(1, 8));
    CHECK(!report.zero_violations.empty());
}

TEST_CASE("local optima vanish in both scenarios")
{
    for (int parties : {2, 3}) {
        OptimizationResult r =
            maximize_hardy({CorrelationSet::Local, HardySpec::canonical(parties)});
        CHECK(r.feasible);
        CHECK(r.q_max == 0);
        REQUIRE(r.behavior.has_value());
        CHECK(validate(*r.behavior).ok());
        CHECK(r.local_weights.has_value());
    }
}

TEST_CASE("no-signaling optima reach one half in both scenarios")
{
    for (int parties : {2, 3}) {
        OptimizationResult r =
            maximize_hardy({CorrelationSet::NoSignaling, HardySpec::canonical(parties)});
        CHECK(r.feasible);
        CHECK(r.q_max == Rational(1, 2));
        REQUIRE(r.behavior.has_value());
        CHECK(validate(*r.behavior).ok());
        CHECK(hardy_report(*r.behavior, HardySpec::canonical(parties)).witness);
    }
}

TEST_CASE("optima are monotone across the nested sets")
{
    // Local <= NoSignaling for a handful of family members (the time-ordered
    // set sits between them; its canonical value is covered by the
    // acceptance suite).
    auto family = hardy_family(3);
    for (std::size_t i = 0; i < family.size(); i += 101) {
        Rational local =
            maximize_hardy({CorrelationSet::Local, family[i]}).q_max;
        Rational ns = maximize_hardy({CorrelationSet::NoSignaling, family[i]}).q_max;
        CHECK(local <= ns);
        CHECK(local == 0);
        CHECK(ns == Rational(1, 2));
    }
}

TEST_CASE("sweeps report one entry per sampled family member")
{
    auto local_bi = sweep_hardy_family(2, CorrelationSet::Local, 1);
    CHECK(local_bi.size() == 64);
    for (const auto& e : local_bi)
        CHECK(e.q_max == 0);

    auto ns_bi = sweep_hardy_family(2, CorrelationSet::NoSignaling, 8);
    CHECK(ns_bi.size() == 8);
    for (const auto& e : ns_bi)
        CHECK(e.q_max == Rational(1, 2));
}
