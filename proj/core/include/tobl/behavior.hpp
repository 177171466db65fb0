#ifndef TOBL_BEHAVIOR_HPP
#define TOBL_BEHAVIOR_HPP

#include "tobl/rational.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tobl {

// Conditional probability table P(outcomes|inputs) for 2 or 3 parties with
// binary inputs and outputs. Cells are stored in lexicographic order:
// cell index = input_index * 2^parties + outcome_index, where input and
// outcome indices read the per-party bits most-significant-first in party
// order A,B,C. Immutable after construction.
class Behavior {
public:
    Behavior(int parties, RVector cells);

    int parties() const { return parties_; }
    std::size_t num_cells() const { return cells_.size(); }
    std::size_t num_input_tuples() const { return std::size_t{1} << parties_; }

    const Rational& cell(std::size_t index) const { return cells_[index]; }
    const RVector& cells() const { return cells_; }

    // Bits most-significant-first: inputs = {x, y[, z]}, outcomes = {a, b[, c]}.
    std::size_t index_of(const std::vector<int>& inputs, const std::vector<int>& outcomes) const;
    const Rational& at(const std::vector<int>& inputs, const std::vector<int>& outcomes) const;

    bool operator==(const Behavior& other) const = default;

    static std::size_t pack_bits(const std::vector<int>& bits);

private:
    int parties_;
    RVector cells_;
};

struct Violation {
    std::string constraint;
    Rational lhs;
    Rational rhs;
};

struct ValidationReport {
    bool normalized = true;
    bool nonnegative = true;
    bool no_signaling = true;
    std::vector<Violation> violations;

    bool ok() const { return normalized && nonnegative && no_signaling; }
};

// Exact check of normalization, nonnegativity, and every marginal-consistency
// equality (each party subset's marginal independent of the dropped parties'
// inputs).
ValidationReport validate(const Behavior& b);

// Marginal distribution over the kept parties' outcomes at the given full
// input tuple. keep is a sorted list of party indices (0=A). The result has
// 2^|keep| entries in outcome-lex order.
RVector marginal(const Behavior& b, const std::vector<int>& keep, const std::vector<int>& inputs);

enum class BehaviorFormat { Json, Csv };

Behavior read_behavior(std::istream& in, BehaviorFormat format);
void write_behavior(const Behavior& b, std::ostream& out, BehaviorFormat format);

Behavior read_behavior_file(const std::string& path);  // format from extension

// Human-readable table, rows = input tuples, columns = outcome tuples.
std::string format_behavior(const Behavior& b);

std::string input_label(int parties, std::size_t input_index);    // e.g. "xyz=001"
std::string outcome_label(int parties, std::size_t outcome_index);  // e.g. "abc=110"

}  // namespace tobl

#endif
