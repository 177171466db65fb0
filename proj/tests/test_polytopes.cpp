#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tobl/behavior.hpp"
#include "tobl/membership.hpp"
#include "tobl/reference_tables.hpp"
#include "tobl/strategies.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <variant>

using namespace tobl;

#ifndef TOBL_DATA_DIR
#error "TOBL_DATA_DIR must point at the repository data directory"
#endif

namespace {

const std::string kDataDir = TOBL_DATA_DIR;

// PR correlation between B and C (b xor c = y * z) with party A uniform and
// independent. Valid no-signaling, but the B-C page is the extremal nonlocal
// box, so no bipartition that separates B from C admits a model in which the
// separated parties share only static randomness.
Behavior pr_box_bc()
{
    RVector cells(64, Rational(0));
    Behavior shape(3, RVector(64, Rational(0)));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        for (int c = 0; c < 2; ++c)
                            if ((b ^ c) == (y & z))
                                cells[shape.index_of({x, y, z}, {a, b, c})] = Rational(1, 4);
    return Behavior(3, std::move(cells));
}

}  // namespace

TEST_CASE("deterministic strategy enumerations hit the exact counts")
{
    CHECK(enumerate_local(2).size() == 16);
    CHECK(enumerate_local(3).size() == 64);
    CHECK(enumerate_time_ordered(Bipartition::A_BC, Direction::Forward).size() == 256);
    CHECK(enumerate_time_ordered(Bipartition::C_AB, Direction::Backward).size() == 256);
}

TEST_CASE("strategy encodings are unique and round-trip")
{
    std::set<std::size_t> seen;
    for (const auto& s : enumerate_local(3)) {
        CHECK(seen.insert(s.encode()).second);
        LocalStrategy back = LocalStrategy::decode(3, s.encode());
        CHECK(back.encode() == s.encode());
    }
    CHECK(seen.size() == 64);

    std::set<std::size_t> seen_to;
    for (const auto& s : enumerate_time_ordered(Bipartition::B_AC, Direction::Forward)) {
        CHECK(seen_to.insert(s.encode()).second);
        auto back = TimeOrderedStrategy::decode(Bipartition::B_AC, Direction::Forward, s.encode());
        CHECK(back.encode() == s.encode());
    }
    CHECK(seen_to.size() == 256);
}

TEST_CASE("strategy behaviors are deterministic valid behaviors")
{
    for (const auto& s : enumerate_local(3)) {
        Behavior b = s.behavior();
        CHECK(validate(b).ok());
        for (const auto& cell : b.cells())
            CHECK((cell == 0 || cell == 1));
    }
    // Time-ordered strategies may signal within the pair, so only
    // normalization and nonnegativity are guaranteed for them.
    for (Direction dir : {Direction::Forward, Direction::Backward})
        for (const auto& s : enumerate_time_ordered(Bipartition::A_BC, dir)) {
            ValidationReport report = validate(s.behavior());
            CHECK(report.normalized);
            CHECK(report.nonnegative);
        }
}

TEST_CASE("no-signaling constraint system has the expected shape")
{
    ConstraintSystem sys3 = ns_constraint_system(3);
    CHECK(sys3.rows.size() == 8 + 48);
    CHECK(sys3.rows.front().size() == 64);
    ConstraintSystem sys2 = ns_constraint_system(2);
    CHECK(sys2.rows.size() == 4 + 8);

    // Every local strategy satisfies the system exactly.
    for (const auto& s : enumerate_local(3)) {
        Behavior b = s.behavior();
        for (std::size_t i = 0; i < sys3.rows.size(); ++i) {
            Rational dot = 0;
            for (std::size_t j = 0; j < 64; ++j)
                dot += sys3.rows[i][j] * b.cell(j);
            CHECK(dot == sys3.rhs[i]);
        }
    }
}

TEST_CASE("deterministic strategies and their mixtures are local members")
{
    CHECK(is_local(membership_local(enumerate_local(3)[37].behavior())));

    // Uniform mixture of all strategies = uniform behavior.
    CHECK(is_local(membership_local(Behavior(3, RVector(64, Rational(1, 8))))));
    CHECK(is_local(membership_local(Behavior(2, RVector(16, Rational(1, 4))))));
}

TEST_CASE("local membership returns convex weights that reconstruct the behavior")
{
    Behavior uniform(3, RVector(64, Rational(1, 8)));
    LocalVerdict verdict = membership_local(uniform);
    REQUIRE(is_local(verdict));
    const auto& weights = std::get<LocalMember>(verdict).weights;
    auto strategies = enumerate_local(3);
    REQUIRE(weights.size() == strategies.size());
    Rational total = 0;
    RVector mix(64, Rational(0));
    for (std::size_t s = 0; s < strategies.size(); ++s) {
        CHECK(weights[s] >= 0);
        total += weights[s];
        Behavior sb = strategies[s].behavior();
        for (std::size_t j = 0; j < 64; ++j)
            mix[j] += weights[s] * sb.cell(j);
    }
    CHECK(total == 1);
    CHECK(mix == uniform.cells());
}

TEST_CASE("the reference behavior is not local")
{
    CHECK(!is_local(membership_local(reference_behavior())));
}

TEST_CASE("the reference behavior is a time-ordered-bi-local member")
{
    ToblVerdict verdict = membership_tobl(reference_behavior(), 1);
    REQUIRE(is_tobl(verdict));
    DecompositionReport check =
        verify_decomposition(reference_behavior(), std::get<ToblDecomposition>(verdict));
    CHECK(check.ok);
    CHECK(check.first_mismatch.empty());
}

TEST_CASE("the published decomposition reconstructs the reference behavior")
{
    const ToblDecomposition& d = reference_decomposition();
    CHECK(verify_decomposition(reference_behavior(), d).ok);
    for (Bipartition bp : all_bipartitions)
        for (Direction dir : {Direction::Forward, Direction::Backward})
            CHECK(reconstruct(d, bp, dir) == reference_behavior());
}

TEST_CASE("a corrupted decomposition fails verification")
{
    ToblDecomposition d = reference_decomposition();
    d.parts[0][0].weight += Rational(1, 8);
    DecompositionReport check = verify_decomposition(reference_behavior(), d);
    CHECK(!check.ok);
    CHECK(!check.first_mismatch.empty());
}

TEST_CASE("decomposition serialization round-trips")
{
    std::ostringstream out;
    write_decomposition(reference_decomposition(), out);
    std::istringstream in(out.str());
    ToblDecomposition parsed = read_decomposition(in);
    CHECK(verify_decomposition(reference_behavior(), parsed).ok);
    std::ostringstream again;
    write_decomposition(parsed, again);
    CHECK(out.str() == again.str());
}

TEST_CASE("the shipped decomposition file matches the embedded one")
{
    std::ifstream in(kDataDir + "/reference_decomposition.json");
    REQUIRE(in.good());
    ToblDecomposition parsed = read_decomposition(in);
    CHECK(verify_decomposition(reference_behavior(), parsed).ok);
}

TEST_CASE("an extremal nonlocal box embedded in a pair is not time-ordered-bi-local")
{
    Behavior box = pr_box_bc();
    REQUIRE(validate(box).ok());
    CHECK(!is_local(membership_local(box)));
    ToblVerdict verdict = membership_tobl(box, 1);
    CHECK(!is_tobl(verdict));
    // The failing bipartition must separate B from C; A|BC keeps the pair
    // intact and stays feasible.
    const auto& nm = std::get<ToblNonMember>(verdict);
    CHECK(nm.bipartition != Bipartition::A_BC);
}
