#include "fpnfr/model.hpp"

#include <algorithm>

namespace fpnfr {

namespace {

struct GscNames {
    GscId id;
    std::string_view key;
    std::string_view display;
};

constexpr std::array<GscNames, 14> kGscNames = {{
    {GscId::data_communications, "data_communications", "Data Communications"},
    {GscId::distributed_data_processing, "distributed_data_processing", "Distributed Data Processing"},
    {GscId::performance, "performance", "Performance"},
    {GscId::heavily_used_configuration, "heavily_used_configuration", "Heavily Used Configuration"},
    {GscId::transaction_rate, "transaction_rate", "Transaction Rate"},
    {GscId::online_data_entry, "online_data_entry", "Online Data Entry"},
    {GscId::end_user_efficiency, "end_user_efficiency", "End User Efficiency"},
    {GscId::online_update, "online_update", "Online Update"},
    {GscId::complex_processing, "complex_processing", "Complex Processing"},
    {GscId::reusability, "reusability", "Reusability"},
    {GscId::installation_ease, "installation_ease", "Installation Ease"},
    {GscId::operational_ease, "operational_ease", "Operational Ease"},
    {GscId::multiple_sites, "multiple_sites", "Multiple Sites"},
    {GscId::facilitate_change, "facilitate_change", "Facilitate Change"},
}};

struct NfrNames {
    NfrId id;
    std::string_view key;
    std::string_view display;
};

constexpr std::array<NfrNames, 7> kNfrNames = {{
    {NfrId::reliability, "reliability", "Reliability"},
    {NfrId::response_time, "response_time", "Response Time"},
    {NfrId::performance, "performance", "Performance"},
    {NfrId::security, "security", "Security"},
    {NfrId::availability, "availability", "Availability"},
    {NfrId::scalability, "scalability", "Scalability"},
    {NfrId::capacity, "capacity", "Capacity"},
}};

constexpr std::array<std::string_view, 5> kFunctionTypeNames = {
    "external_input", "external_output", "external_inquiry", "internal_logical_file",
    "external_interface_file",
};

constexpr std::array<std::string_view, 3> kComplexityNames = {"low", "average", "high"};

}  // namespace

int ordinal(GscId id) { return static_cast<int>(id); }

std::string_view id_name(GscId id) {
    return kGscNames[static_cast<std::size_t>(ordinal(id) - 1)].key;
}

std::string_view display_name(GscId id) {
    return kGscNames[static_cast<std::size_t>(ordinal(id) - 1)].display;
}

std::string_view id_name(NfrId id) {
    return kNfrNames[static_cast<std::size_t>(id)].key;
}

std::string_view display_name(NfrId id) {
    return kNfrNames[static_cast<std::size_t>(id)].display;
}

std::string_view id_name(FunctionType type) {
    return kFunctionTypeNames[static_cast<std::size_t>(type)];
}

std::string_view id_name(Complexity level) {
    return kComplexityNames[static_cast<std::size_t>(level)];
}

std::optional<GscId> gsc_from_name(std::string_view name) {
    for (const auto& entry : kGscNames) {
        if (entry.key == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

std::optional<NfrId> nfr_from_name(std::string_view name) {
    for (const auto& entry : kNfrNames) {
        if (entry.key == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

std::optional<FunctionType> function_type_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kFunctionTypeNames.size(); ++i) {
        if (kFunctionTypeNames[i] == name) {
            return static_cast<FunctionType>(i);
        }
    }
    return std::nullopt;
}

std::optional<Complexity> complexity_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kComplexityNames.size(); ++i) {
        if (kComplexityNames[i] == name) {
            return static_cast<Complexity>(i);
        }
    }
    return std::nullopt;
}

std::string cell_name(const CellKey& key) {
    std::string out(id_name(key.first));
    out += '.';
    out += id_name(key.second);
    return out;
}

std::optional<CellKey> cell_from_name(std::string_view name) {
    const auto dot = name.find('.');
    if (dot == std::string_view::npos) {
        return std::nullopt;
    }
    const auto type = function_type_from_name(name.substr(0, dot));
    const auto level = complexity_from_name(name.substr(dot + 1));
    if (!type || !level) {
        return std::nullopt;
    }
    return CellKey{*type, *level};
}

std::array<CellKey, kCellCount> all_cells() {
    std::array<CellKey, kCellCount> out;
    std::size_t i = 0;
    for (const auto type : kAllFunctionTypes) {
        for (const auto level : kAllComplexities) {
            out[i++] = CellKey{type, level};
        }
    }
    return out;
}

std::int64_t FunctionInventory::count_at(const CellKey& key) const {
    const auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

void FunctionInventory::set(FunctionType type, Complexity level, std::int64_t count) {
    counts[CellKey{type, level}] = count;
}

const Decimal& WeightProfile::weight_at(const CellKey& key) const {
    const auto it = weights.find(key);
    if (it == weights.end()) {
        throw PreconditionError("weights." + cell_name(key), "<missing>", "all 15 cells present");
    }
    return it->second;
}

namespace {

void check_di_range(std::vector<Violation>& out, const std::string& kind, std::string_view name,
                    DegreeOfInfluence di) {
    if (!di.in_range()) {
        out.push_back({kind + "." + std::string(name),
                       "DI out of range 0..5 for " + kind + " " + std::string(name) + ": " +
                           std::to_string(di.value)});
    }
}

}  // namespace

ValidationResult validate_project(const Project& project) {
    ValidationResult result;
    auto& out = result.violations;

    if (project.name.empty()) {
        out.push_back({"name", "project name must be non-empty"});
    }

    for (const auto& cell : all_cells()) {
        const auto it = project.inventory.counts.find(cell);
        if (it == project.inventory.counts.end()) {
            out.push_back({"inventory." + cell_name(cell), "inventory cell missing: " + cell_name(cell)});
        } else if (it->second < 0) {
            out.push_back({"inventory." + cell_name(cell),
                           "count must be >= 0 for " + cell_name(cell) + ": " + std::to_string(it->second)});
        }
    }

    for (const auto gsc : kAllGscs) {
        const auto it = project.gsc.ratings.find(gsc);
        if (it == project.gsc.ratings.end()) {
            out.push_back({"gsc." + std::string(id_name(gsc)),
                           "gsc rating missing: " + std::string(id_name(gsc))});
        } else {
            check_di_range(out, "gsc", id_name(gsc), it->second);
        }
    }

    for (const auto nfr : kAllNfrs) {
        const auto it = project.nfr.ratings.find(nfr);
        if (it == project.nfr.ratings.end()) {
            out.push_back({"nfr." + std::string(id_name(nfr)),
                           "nfr rating missing: " + std::string(id_name(nfr))});
        } else {
            check_di_range(out, "nfr", id_name(nfr), it->second);
        }
    }

    return result;
}

ValidationResult validate_weight_profile(const WeightProfile& profile) {
    ValidationResult result;
    auto& out = result.violations;

    if (profile.name.empty()) {
        out.push_back({"name", "profile name must be non-empty"});
    }

    for (const auto& cell : all_cells()) {
        const auto it = profile.weights.find(cell);
        if (it == profile.weights.end()) {
            out.push_back({"weights." + cell_name(cell), "weight cell missing: " + cell_name(cell)});
        } else if (!(Decimal(0) < it->second)) {
            out.push_back({"weights." + cell_name(cell),
                           "weight must be > 0 for " + cell_name(cell) + ": " + it->second.to_string()});
        }
    }

    for (const auto type : kAllFunctionTypes) {
        const auto low = profile.weights.find(CellKey{type, Complexity::low});
        const auto avg = profile.weights.find(CellKey{type, Complexity::average});
        const auto high = profile.weights.find(CellKey{type, Complexity::high});
        if (low == profile.weights.end() || avg == profile.weights.end() ||
            high == profile.weights.end()) {
            continue;  // missing cells already reported
        }
        if (avg->second < low->second || high->second < avg->second) {
            out.push_back({"weights." + std::string(id_name(type)),
                           "weights must be nondecreasing low <= average <= high for " +
                               std::string(id_name(type))});
        }
    }

    return result;
}

FunctionInventory zero_inventory() {
    FunctionInventory inv;
    for (const auto& cell : all_cells()) {
        inv.counts[cell] = 0;
    }
    return inv;
}

GscRatingSheet uniform_gsc_sheet(int di) {
    GscRatingSheet sheet;
    for (const auto gsc : kAllGscs) {
        sheet.ratings[gsc] = DegreeOfInfluence{di};
    }
    return sheet;
}

NfrRatingSheet uniform_nfr_sheet(int di) {
    NfrRatingSheet sheet;
    for (const auto nfr : kAllNfrs) {
        sheet.ratings[nfr] = DegreeOfInfluence{di};
    }
    return sheet;
}

WeightProfile uniform_weight_profile(std::string name, const Decimal& weight) {
    WeightProfile profile;
    profile.name = std::move(name);
    for (const auto& cell : all_cells()) {
        profile.weights[cell] = weight;
    }
    return profile;
}

}  // namespace fpnfr
