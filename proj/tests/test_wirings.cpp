#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tobl/behavior.hpp"
#include "tobl/reference_tables.hpp"
#include "tobl/wirings.hpp"

#include <set>

using namespace tobl;

namespace {

Behavior pr_box()
{
    Behavior shape(2, RVector(16, Rational(0)));
    RVector cells(16, Rational(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == (x & y))
                        cells[shape.index_of({x, y}, {a, b})] = Rational(1, 2);
    return Behavior(2, std::move(cells));
}

// Each party outputs its input: deterministic, CHSH exactly 2.
Behavior echo_behavior()
{
    Behavior shape(2, RVector(16, Rational(0)));
    RVector cells(16, Rational(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            cells[shape.index_of({x, y}, {x, y})] = 1;
    return Behavior(2, std::move(cells));
}

// Product of three deterministic parties, each outputting 0.
Behavior product_zero()
{
    Behavior shape(3, RVector(64, Rational(0)));
    RVector cells(64, Rational(0));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                cells[shape.index_of({x, y, z}, {0, 0, 0})] = 1;
    return Behavior(3, std::move(cells));
}

}  // namespace

TEST_CASE("wiring enumeration is exhaustive and duplicate-free")
{
    auto wirings = enumerate_wirings(PartyPair::BC);
    CHECK(wirings.size() == 65536);
    CHECK(kWiringsPerPair == 65536);

    std::set<std::uint32_t> ids;
    for (const auto& w : wirings)
        CHECK(ids.insert(w.encode()).second);
    CHECK(ids.size() == 65536);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == 65535);
}

TEST_CASE("wiring encoding round-trips")
{
    for (std::uint32_t id : {0u, 1u, 255u, 4096u, 65535u, 12345u}) {
        Wiring w = Wiring::decode(PartyPair::AB, id);
        CHECK(w.encode() == id);
    }
}

TEST_CASE("correlator extrema")
{
    CHECK(chsh_value(pr_box()) == 4);
    CHECK(chsh_value(Behavior(2, RVector(16, Rational(1, 4)))) == 0);
    CHECK(chsh_value(echo_behavior()) == 2);
}

TEST_CASE("the pass-through wiring reproduces the pair marginal")
{
    // B measures first with input w, C measures input 0, output = B's outcome:
    // the effective pair behaves exactly like B at fixed z = 0.
    Wiring w;
    w.pair = PartyPair::BC;
    for (int stage = 0; stage < 2; ++stage) {
        w.stage[stage].order = 0;  // lower-indexed party (B) first
        w.stage[stage].first_input = stage;
        w.stage[stage].second_input = {0, 0};
        w.stage[stage].output = {0, 0, 1, 1};  // first outcome
    }

    const Behavior& ref = reference_behavior();
    Behavior wired = apply_wiring(ref, w);
    Behavior shape(2, RVector(16, Rational(0)));
    for (int x = 0; x < 2; ++x)
        for (int v = 0; v < 2; ++v)
            for (int a = 0; a < 2; ++a)
                for (int o = 0; o < 2; ++o) {
                    Rational expect = ref.at({x, v, 0}, {a, o, 0}) + ref.at({x, v, 0}, {a, o, 1});
                    CHECK(wired.at({x, v}, {a, o}) == expect);
                }
}

TEST_CASE("wired behaviors stay valid no-signaling")
{
    const Behavior& ref = reference_behavior();
    for (PartyPair pair : all_pairs)
        for (std::uint32_t id = 0; id < kWiringsPerPair; id += 2048) {
            Behavior wired = apply_wiring(ref, Wiring::decode(pair, id));
            CHECK(wired.parties() == 2);
            CHECK(validate(wired).ok());
        }
}

TEST_CASE("wirings of a product behavior never create nonlocality")
{
    WiringAuditReport report =
        audit_wirings(product_zero(), {all_pairs.begin(), all_pairs.end()}, 1);
    CHECK(report.total == 3 * 65536);
    CHECK(report.nonlocal == 0);
    CHECK(report.all_local());
    CHECK(report.max_chsh <= 2);
}

TEST_CASE("single-pair audit of the reference behavior is clean")
{
    WiringAuditReport report = audit_wirings(reference_behavior(), {PartyPair::AB}, 1);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].total == 65536);
    CHECK(report.nonlocal == 0);
    CHECK(report.max_chsh <= 2);
    CHECK(report.pairs[0].distinct_behaviors < 65536);
}
