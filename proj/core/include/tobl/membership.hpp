#ifndef TOBL_MEMBERSHIP_HPP
#define TOBL_MEMBERSHIP_HPP

#include "tobl/behavior.hpp"
#include "tobl/linprog.hpp"
#include "tobl/strategies.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tobl {

// Equality system (A, b) over behavior cells: one normalization row per
// input tuple plus the pairwise marginal-consistency rows. A cell vector is
// a valid no-signaling behavior iff it satisfies the system and is
// componentwise nonnegative.
struct ConstraintSystem {
    RMatrix rows;
    RVector rhs;
};

ConstraintSystem ns_constraint_system(int parties);

struct LocalMember {
    RVector weights;  // convex weights over enumerate_local(parties)
};

using LocalVerdict = std::variant<LocalMember, LpInfeasible>;

// Exact LP membership in the local polytope.
LocalVerdict membership_local(const Behavior& b);

bool is_local(const LocalVerdict& v);

// One deterministic response of the signaling pair for one direction.
struct PairResponse {
    std::array<int, 2> first;   // first mover's outcome per own input
    std::array<int, 4> second;  // second mover's outcome per (first_input*2 + own_input)
};

// One lambda of a shared-randomness time-ordered model for one bipartition.
struct ToblTerm {
    Rational weight;
    std::array<int, 2> lone;  // lone party's outcome per own input
    PairResponse forward;     // lower-indexed pair member first
    PairResponse backward;    // higher-indexed pair member first
};

// Weighted deterministic model per bipartition; the same weights and lone
// responses serve both directions, so both reconstructions must reproduce
// the behavior exactly.
struct ToblDecomposition {
    std::array<std::vector<ToblTerm>, 3> parts;  // indexed by lone party
};

struct ToblNonMember {
    Bipartition bipartition;  // first bipartition whose system is infeasible
    LpInfeasible certificate;
};

using ToblVerdict = std::variant<ToblDecomposition, ToblNonMember>;

// Exact LP membership in the time-ordered-bi-local set. The three
// bipartition subproblems run on up to `threads` workers.
ToblVerdict membership_tobl(const Behavior& b, unsigned threads = 0);

bool is_tobl(const ToblVerdict& v);

struct DecompositionReport {
    bool ok = true;
    std::string first_mismatch;  // empty when ok
};

// Exact check that both direction reconstructions of every bipartition
// reproduce b, with nonnegative weights summing to one.
DecompositionReport verify_decomposition(const Behavior& b, const ToblDecomposition& d);

// Reconstructs the behavior from one bipartition and direction of d.
Behavior reconstruct(const ToblDecomposition& d, Bipartition bp, Direction dir);

void write_decomposition(const ToblDecomposition& d, std::ostream& out);
ToblDecomposition read_decomposition(std::istream& in);

}  // namespace tobl

#endif
