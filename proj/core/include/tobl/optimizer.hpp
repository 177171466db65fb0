#ifndef TOBL_OPTIMIZER_HPP
#define TOBL_OPTIMIZER_HPP

#include "tobl/behavior.hpp"
#include "tobl/hardy.hpp"
#include "tobl/membership.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tobl {

enum class CorrelationSet { Local, NoSignaling, Tobl };

std::string set_name(CorrelationSet set);

struct OptimizationRequest {
    CorrelationSet set;
    HardySpec spec;  // carries the scenario via its party count
};

struct OptimizationResult {
    bool feasible = true;  // false only for a contradictory pinned-cell system
    Rational q_max;
    std::optional<Behavior> behavior;             // attaining behavior when feasible
    std::optional<RVector> local_weights;         // Local set only
    std::optional<ToblDecomposition> decomposition;  // Tobl set only
};

// Maximizes the spec's success cell over the requested correlation set by
// exact LP: variables are behavior cells plus strategy weights where the set
// demands them, the spec's zero cells are pinned to 0.
OptimizationResult maximize_hardy(const OptimizationRequest& req);

struct SweepEntry {
    HardySpec spec;
    Rational q_max;
};

// Runs maximize_hardy over hardy_family(parties) for the given set. A
// positive stride samples every stride-th family member (stride 1 = the
// whole family); enumeration order is the family order.
std::vector<SweepEntry> sweep_hardy_family(int parties, CorrelationSet set,
                                           std::size_t stride = 1);

struct ReportItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct ReferenceReport {
    std::vector<ReportItem> items;
    bool all_pass() const;
};

// Re-derives the published results: the reference behavior's validity,
// Hardy value and memberships, its decomposition, and the four optimizer
// bounds (local 0, bipartite/tripartite no-signaling 1/2, time-ordered 1/4).
ReferenceReport reproduce_reference();

}  // namespace tobl

#endif
