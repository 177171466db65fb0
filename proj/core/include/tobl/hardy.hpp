#ifndef TOBL_HARDY_HPP
#define TOBL_HARDY_HPP

#include "tobl/behavior.hpp"
#include "tobl/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tobl {

// One event in a behavior table: the cell P(outcomes|inputs).
struct Event {
    std::vector<int> inputs;
    std::vector<int> outcomes;

    bool operator==(const Event&) const = default;
};

// A Hardy argument: one success cell required strictly positive plus a set
// of cells pinned to zero (four tripartite, three bipartite). Parametrized
// by which input is "unprimed" per party and the outcome bits of the
// success/zero events:
//
//   success:  P(i, j[, k]   | u_A,   u_B[,  u_C])
//   zeros:    P(l, j[, k]   | u_A',  u_B[,  u_C])
//             P(i, m[, k]   | u_A,   u_B'[, u_C])
//             P(i, j[, n]   | u_A,   u_B[,  u_C'])   (tripartite only)
//             P(l+1, m+1[, n+1] | u_A', u_B'[, u_C'])  (bits mod 2)
class HardySpec {
public:
    HardySpec(int parties, std::vector<int> unprimed_inputs,
              std::vector<int> success_bits, std::vector<int> zero_bits);

    int parties() const { return parties_; }
    const Event& success() const { return success_; }
    const std::vector<Event>& zeros() const { return zeros_; }

    std::size_t success_cell(const Behavior& like) const;
    std::vector<std::size_t> zero_cells(const Behavior& like) const;

    std::string describe() const;

    static HardySpec canonical(int parties);

private:
    int parties_;
    std::vector<int> unprimed_;
    std::vector<int> success_bits_;
    std::vector<int> zero_bits_;
    Event success_;
    std::vector<Event> zeros_;
};

struct HardyReport {
    bool witness = false;
    Rational q;  // value of the success cell, reported regardless of witness
    std::vector<Violation> zero_violations;
};

// Pure table lookup: witness iff all pinned cells are exactly zero and the
// success cell is strictly positive.
HardyReport hardy_report(const Behavior& b, const HardySpec& spec);

// The whole family for a scenario: all unprimed-input choices times all
// outcome-bit choices, in a fixed lexicographic order (512 tripartite
// members, 64 bipartite).
std::vector<HardySpec> hardy_family(int parties);

HardySpec read_hardy_spec_file(const std::string& path);

}  // namespace tobl

#endif
