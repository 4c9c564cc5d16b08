#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpnfr/decimal.hpp"
#include "fpnfr/errors.hpp"

namespace fpnfr {

// ---------------------------------------------------------------------------
// Closed enumerations
// ---------------------------------------------------------------------------

/// The 14 general system characteristics, ordinals fixed 1..14.
enum class GscId : int {
    data_communications = 1,
    distributed_data_processing = 2,
    performance = 3,
    heavily_used_configuration = 4,
    transaction_rate = 5,
    online_data_entry = 6,
    end_user_efficiency = 7,
    online_update = 8,
    complex_processing = 9,
    reusability = 10,
    installation_ease = 11,
    operational_ease = 12,
    multiple_sites = 13,
    facilitate_change = 14,
};

inline constexpr std::array<GscId, 14> kAllGscs = {
    GscId::data_communications,  GscId::distributed_data_processing,
    GscId::performance,          GscId::heavily_used_configuration,
    GscId::transaction_rate,     GscId::online_data_entry,
    GscId::end_user_efficiency,  GscId::online_update,
    GscId::complex_processing,   GscId::reusability,
    GscId::installation_ease,    GscId::operational_ease,
    GscId::multiple_sites,       GscId::facilitate_change,
};

/// The 7 non-functional requirements covered by the extended adjustment.
enum class NfrId : int {
    reliability = 0,
    response_time,
    performance,
    security,
    availability,
    scalability,
    capacity,
};

inline constexpr std::array<NfrId, 7> kAllNfrs = {
    NfrId::reliability, NfrId::response_time, NfrId::performance, NfrId::security,
    NfrId::availability, NfrId::scalability,  NfrId::capacity,
};

enum class FunctionType : int {
    external_input = 0,
    external_output,
    external_inquiry,
    internal_logical_file,
    external_interface_file,
};

enum class Complexity : int {
    low = 0,
    average,
    high,
};

inline constexpr std::array<FunctionType, 5> kAllFunctionTypes = {
    FunctionType::external_input, FunctionType::external_output, FunctionType::external_inquiry,
    FunctionType::internal_logical_file, FunctionType::external_interface_file,
};

inline constexpr std::array<Complexity, 3> kAllComplexities = {
    Complexity::low, Complexity::average, Complexity::high,
};

int ordinal(GscId id);  // 1..14

// Identifier names ("data_communications") used in files and the CLI, plus
// human-readable display names for prompts and text reports.
std::string_view id_name(GscId id);
std::string_view id_name(NfrId id);
std::string_view id_name(FunctionType type);
std::string_view id_name(Complexity level);
std::string_view display_name(GscId id);
std::string_view display_name(NfrId id);

std::optional<GscId> gsc_from_name(std::string_view name);
std::optional<NfrId> nfr_from_name(std::string_view name);
std::optional<FunctionType> function_type_from_name(std::string_view name);
std::optional<Complexity> complexity_from_name(std::string_view name);

// ---------------------------------------------------------------------------
// Ratings and inventories
// ---------------------------------------------------------------------------

/// A 0..5 influence rating. The struct can hold any int so that out-of-range
/// data stays representable for validation to report; in_range() is the
/// invariant check.
struct DegreeOfInfluence {
    int value = 0;

    static constexpr int kMin = 0;
    static constexpr int kMax = 5;

    bool in_range() const { return value >= kMin && value <= kMax; }

    friend auto operator<=>(const DegreeOfInfluence&, const DegreeOfInfluence&) = default;
};

/// One (function type, complexity) cell of the inventory or weight table.
using CellKey = std::pair<FunctionType, Complexity>;

inline constexpr std::size_t kCellCount = 15;

std::string cell_name(const CellKey& key);  // "external_input.low"
std::optional<CellKey> cell_from_name(std::string_view name);

/// All 15 cells in enumeration order (types outer, complexities inner).
std::array<CellKey, kCellCount> all_cells();

/// Counts of functions per (type, complexity) cell. Total over all 15 cells
/// when valid; totality is checked by validate_project, not by construction.
struct FunctionInventory {
    std::map<CellKey, std::int64_t> counts;

    std::int64_t count_at(const CellKey& key) const;
    void set(FunctionType type, Complexity level, std::int64_t count);

    friend bool operator==(const FunctionInventory&, const FunctionInventory&) = default;
};

/// (type, complexity) -> function points per counted item.
struct WeightProfile {
    std::string name;
    std::map<CellKey, Decimal> weights;

    const Decimal& weight_at(const CellKey& key) const;

    friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

struct GscRatingSheet {
    std::map<GscId, DegreeOfInfluence> ratings;

    friend bool operator==(const GscRatingSheet&, const GscRatingSheet&) = default;
};

struct NfrRatingSheet {
    std::map<NfrId, DegreeOfInfluence> ratings;
    std::map<NfrId, std::string> rationale;  // optional free text, never affects computation

    friend bool operator==(const NfrRatingSheet&, const NfrRatingSheet&) = default;
};

struct Project {
    std::string name;
    FunctionInventory inventory;
    GscRatingSheet gsc;
    NfrRatingSheet nfr;
    std::string weight_profile_name;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const Project&, const Project&) = default;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Lint emitted when an NFR rating diverges from what its mapped GSCs imply.
struct ConsistencyWarning {
    NfrId nfr = NfrId::reliability;
    DegreeOfInfluence nfr_di;
    std::vector<std::pair<GscId, DegreeOfInfluence>> mapped_gsc_dis;
    DegreeOfInfluence suggested_di;
    std::string message;

    friend bool operator==(const ConsistencyWarning&, const ConsistencyWarning&) = default;
};

struct EstimateReport {
    Decimal ufp;
    int tdi = 0;    // 0..70
    int adi = 0;    // 0..35
    int tdi_n = 0;  // tdi + adi, 0..105
    Decimal vaf_classic;
    Decimal vaf_extended;
    Decimal fp_classic;
    Decimal fp_extended;
    std::vector<ConsistencyWarning> warnings;

    friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant of a project and returns all violations.
/// Total: never throws on any representable input.
ValidationResult validate_project(const Project& project);

/// Checks totality, positivity, and per-type monotonicity of a weight table.
ValidationResult validate_weight_profile(const WeightProfile& profile);

// Convenience builders used across the toolkit and in tests.
FunctionInventory zero_inventory();
GscRatingSheet uniform_gsc_sheet(int di);
NfrRatingSheet uniform_nfr_sheet(int di);
WeightProfile uniform_weight_profile(std::string name, const Decimal& weight);

}  // namespace fpnfr
