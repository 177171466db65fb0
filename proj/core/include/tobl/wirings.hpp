#ifndef TOBL_WIRINGS_HPP
#define TOBL_WIRINGS_HPP

#include "tobl/behavior.hpp"
#include "tobl/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tobl {

// Which two parties are merged into one effective party.
enum class PartyPair { BC = 0, AC = 1, AB = 2 };

constexpr std::array<PartyPair, 3> all_pairs = {PartyPair::BC, PartyPair::AC, PartyPair::AB};

std::string pair_name(PartyPair pair);
std::array<int, 2> merged_parties(PartyPair pair);  // ascending indices
int spectator_party(PartyPair pair);

// Deterministic sequential protocol collapsing the merged pair into one
// effective party with binary input w and binary output. Per effective
// input: who measures first, that party's input, the second input as a
// function of the first outcome, and the effective output as a function of
// both outcomes.
struct Wiring {
    struct Stage {
        int order;                       // 0: lower-indexed party first
        int first_input;
        std::array<int, 2> second_input;  // indexed by first outcome
        std::array<int, 4> output;        // indexed by first_outcome*2 + second_outcome
    };
    PartyPair pair;
    std::array<Stage, 2> stage;  // per effective input w

    // 8 bits per stage (order | first_input<<1 | second_input<<2 | output<<4),
    // stage 0 in the low byte. Range [0, 65536).
    std::uint32_t encode() const;
    static Wiring decode(PartyPair pair, std::uint32_t id);
};

constexpr std::uint32_t kWiringsPerPair = 1u << 16;

std::vector<Wiring> enumerate_wirings(PartyPair pair);

// Effective bipartite behavior P(a_spectator, o | x_spectator, w). The
// spectator is the first party of the result, the merged pair the second.
// Requires a valid no-signaling tripartite behavior.
Behavior apply_wiring(const Behavior& b, const Wiring& w);

// Maximum over the 8 sign conventions of the four-correlator Bell
// expression, with parity correlators E_xy = sum (-1)^(a xor b) P(ab|xy).
// At most 2 for local behaviors, at most 4 for no-signaling ones.
Rational chsh_value(const Behavior& bipartite);

struct PairAuditSummary {
    PartyPair pair;
    std::uint64_t total = 0;
    std::uint64_t nonlocal = 0;
    Rational max_chsh;
    std::uint32_t worst_wiring = 0;  // wiring attaining max_chsh (lowest id)
    std::uint64_t distinct_behaviors = 0;
};

struct WiringAuditReport {
    std::vector<PairAuditSummary> pairs;
    std::uint64_t total = 0;
    std::uint64_t nonlocal = 0;
    Rational max_chsh;

    bool all_local() const { return nonlocal == 0; }
};

// Exhaustive audit: applies every deterministic wiring of each requested
// pair, computes its CHSH value, and decides bipartite locality by LP
// (CHSH > 2 short-circuits to nonlocal). Identical wired behaviors share
// one verdict. Work is split over `threads` workers (0 = hardware default).
WiringAuditReport audit_wirings(const Behavior& b, const std::vector<PartyPair>& pairs,
                                unsigned threads = 0,
                                std::uint32_t progress_interval = 0);

}  // namespace tobl

#endif
