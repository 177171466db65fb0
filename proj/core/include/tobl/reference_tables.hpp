#ifndef TOBL_REFERENCE_TABLES_HPP
#define TOBL_REFERENCE_TABLES_HPP

#include "tobl/behavior.hpp"
#include "tobl/membership.hpp"

namespace tobl {

// The reference tripartite no-signaling behavior with Hardy success 1/4
// for the canonical argument. Every cell is 0 or 1/4.
const Behavior& reference_behavior();

// Its published time-ordered decomposition: four terms of weight 1/4 per
// bipartition, shared lone responses across both directions.
const ToblDecomposition& reference_decomposition();

}  // namespace tobl

#endif
