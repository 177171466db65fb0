#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tobl/behavior.hpp"
#include "tobl/reference_tables.hpp"
#include "tobl/rational.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace tobl;

#ifndef TOBL_DATA_DIR
#error "TOBL_DATA_DIR must point at the repository data directory"
#endif

namespace {

const std::string kDataDir = TOBL_DATA_DIR;

}  // namespace

TEST_CASE("cell indexing packs bits most significant first")
{
    CHECK(Behavior::pack_bits({1, 0, 1}) == 5);
    CHECK(Behavior::pack_bits({0, 1}) == 1);

    const Behavior& ref = reference_behavior();
    CHECK(ref.parties() == 3);
    CHECK(ref.num_cells() == 64);
    CHECK(ref.index_of({0, 0, 1}, {1, 1, 0}) == std::size_t{1} * 8 + 6);
    CHECK(ref.at({0, 0, 1}, {1, 1, 0}) == Rational(1, 4));
    CHECK(ref.at({0, 0, 0}, {0, 0, 1}) == 0);
}

TEST_CASE("reference behavior is a valid no-signaling behavior")
{
    ValidationReport report = validate(reference_behavior());
    CHECK(report.normalized);
    CHECK(report.nonnegative);
    CHECK(report.no_signaling);
    CHECK(report.violations.empty());
    CHECK(report.ok());
}

TEST_CASE("breaking normalization is detected")
{
    RVector cells = reference_behavior().cells();
    cells[0] += Rational(1, 8);
    ValidationReport report = validate(Behavior(3, std::move(cells)));
    CHECK(!report.normalized);
    CHECK(!report.ok());
    CHECK(!report.violations.empty());
}

TEST_CASE("a negative cell is detected")
{
    RVector cells = reference_behavior().cells();
    cells[0] -= Rational(1, 2);  // keeps the row sum broken too, but sign first
    ValidationReport report = validate(Behavior(3, std::move(cells)));
    CHECK(!report.nonnegative);
    CHECK(!report.ok());
}

TEST_CASE("a normalization-preserving marginal shift breaks no-signaling")
{
    RVector cells = reference_behavior().cells();
    // Move weight between outcomes within one input row: row sums stay 1,
    // but the parties' marginals at that input tuple change.
    cells[0] -= Rational(1, 4);
    cells[1] += Rational(1, 4);
    ValidationReport report = validate(Behavior(3, std::move(cells)));
    CHECK(report.normalized);
    CHECK(report.nonnegative);
    CHECK(!report.no_signaling);
    CHECK(!report.violations.empty());
}

TEST_CASE("marginals sum the dropped parties' outcomes")
{
    const Behavior& ref = reference_behavior();
    // AB marginal at z = 0, inputs x = y = 0.
    RVector ab = marginal(ref, {0, 1}, {0, 0, 0});
    REQUIRE(ab.size() == 4);
    for (std::size_t out = 0; out < 4; ++out) {
        Rational expect = ref.at({0, 0, 0}, {int(out >> 1), int(out & 1), 0}) +
                          ref.at({0, 0, 0}, {int(out >> 1), int(out & 1), 1});
        CHECK(ab[out] == expect);
    }

    // Single-party marginal is independent of the other inputs (no-signaling).
    RVector a0 = marginal(ref, {0}, {0, 0, 0});
    RVector a1 = marginal(ref, {0}, {0, 1, 1});
    CHECK(a0 == a1);
    CHECK(a0[0] + a0[1] == 1);
}

TEST_CASE("JSON serialization round-trips byte-identically")
{
    std::ostringstream first;
    write_behavior(reference_behavior(), first, BehaviorFormat::Json);
    std::istringstream in(first.str());
    Behavior parsed = read_behavior(in, BehaviorFormat::Json);
    CHECK(parsed == reference_behavior());
    std::ostringstream second;
    write_behavior(parsed, second, BehaviorFormat::Json);
    CHECK(first.str() == second.str());
}

TEST_CASE("CSV serialization round-trips")
{
    std::ostringstream out;
    write_behavior(reference_behavior(), out, BehaviorFormat::Csv);
    std::istringstream in(out.str());
    CHECK(read_behavior(in, BehaviorFormat::Csv) == reference_behavior());
}

TEST_CASE("shipped data files match the embedded tables")
{
    CHECK(read_behavior_file(kDataDir + "/reference_behavior.json") == reference_behavior());
    CHECK(read_behavior_file(kDataDir + "/reference_behavior.csv") == reference_behavior());
}

TEST_CASE("malformed behavior input is rejected")
{
    std::istringstream not_json("{");
    CHECK_THROWS(read_behavior(not_json, BehaviorFormat::Json));

    std::istringstream bad_value(R"({"parties":2,"cells":{"xy=00":{"ab=00":"x"}}})");
    CHECK_THROWS(read_behavior(bad_value, BehaviorFormat::Json));

    CHECK_THROWS_AS(read_behavior_file(kDataDir + "/does_not_exist.json"), std::exception);
}

TEST_CASE("behavior construction checks cell count")
{
    CHECK_THROWS_AS(Behavior(3, RVector(16, Rational(0))), std::invalid_argument);
    CHECK_THROWS_AS(Behavior(4, RVector(256, Rational(0))), std::invalid_argument);
}
