#ifndef TOBL_STRATEGIES_HPP
#define TOBL_STRATEGIES_HPP

#include "tobl/behavior.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tobl {

// Deterministic local response: one outcome bit per input bit per party.
// Canonical encoding packs the truth tables as
//   id = sum over parties p, inputs i of resp[p][i] << (2*p + i).
struct LocalStrategy {
    int parties;
    std::array<std::array<int, 2>, 3> resp;  // resp[party][input]

    std::size_t encode() const;
    Behavior behavior() const;

    static LocalStrategy decode(int parties, std::size_t id);
};

// All 4^parties deterministic local strategies, ordered by encoding.
std::vector<LocalStrategy> enumerate_local(int parties);

// Bipartitions of a tripartite scenario, named by the lone party.
enum class Bipartition { A_BC = 0, B_AC = 1, C_AB = 2 };

constexpr std::array<Bipartition, 3> all_bipartitions = {
    Bipartition::A_BC, Bipartition::B_AC, Bipartition::C_AB};

int lone_party(Bipartition bp);
std::array<int, 2> pair_parties(Bipartition bp);  // ascending party indices
std::string bipartition_name(Bipartition bp);     // "A|BC", "B|AC", "C|AB"

// Direction of the one-way signaling inside the pair. Forward: the
// lower-indexed pair member measures first and its input may influence the
// other; Backward is the reverse order.
enum class Direction { Forward = 0, Backward = 1 };

// Deterministic one-way-signaling response of the pair, together with the
// lone party's local response. The first mover's outcome depends on its own
// input only; the second mover's outcome may depend on both inputs
// (second_resp indexed by first_input*2 + own_input).
struct TimeOrderedStrategy {
    Bipartition bipartition;
    Direction direction;
    std::array<int, 2> lone_resp;
    std::array<int, 2> first_resp;
    std::array<int, 4> second_resp;

    std::size_t encode() const;  // lone + 4*first + 16*second truth tables
    Behavior behavior() const;   // induced 0/1 tripartite behavior

    static TimeOrderedStrategy decode(Bipartition bp, Direction dir, std::size_t id);
};

// All 4 * 4 * 16 = 256 strategies for the given bipartition and direction,
// ordered by encoding.
std::vector<TimeOrderedStrategy> enumerate_time_ordered(Bipartition bp, Direction dir);

}  // namespace tobl

#endif
