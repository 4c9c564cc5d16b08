#pragma once

#include "fpnfr/decimal.hpp"
#include "fpnfr/model.hpp"

namespace fpnfr {

/// Unadjusted function points: sum over all 15 (type, complexity) cells of
/// count * weight. Exact, deterministic, independent of iteration order.
/// Throws PreconditionError when either argument breaks its type invariants.
Decimal compute_ufp(const FunctionInventory& inventory, const WeightProfile& profile);

}  // namespace fpnfr
