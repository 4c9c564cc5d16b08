#include "fpnfr/counting.hpp"

namespace fpnfr {

Decimal compute_ufp(const FunctionInventory& inventory, const WeightProfile& profile) {
    Decimal total;
    for (const auto& cell : all_cells()) {
        const auto count_it = inventory.counts.find(cell);
        if (count_it == inventory.counts.end()) {
            throw PreconditionError("inventory." + cell_name(cell), "<missing>", "all 15 cells present");
        }
        if (count_it->second < 0) {
            throw PreconditionError("inventory." + cell_name(cell),
                                    std::to_string(count_it->second), "count >= 0");
        }
        const Decimal& weight = profile.weight_at(cell);
        if (!(Decimal(0) < weight)) {
            throw PreconditionError("weights." + cell_name(cell), weight.to_string(), "weight > 0");
        }
        total += Decimal(count_it->second) * weight;
    }
    return total;
}

}  // namespace fpnfr
