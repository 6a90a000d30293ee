#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blochlip/mapping.hpp"
#include "blochlip/seminorm.hpp"

namespace blochlip {

enum class FunctionClass { Bloch, Normal, Both, Neither, Unknown };

std::string to_string(FunctionClass c);

// Concrete mapping with known analytic properties, wired for the verification
// campaigns. Derivative oracles are hand-written per entry.
struct CatalogEntry {
    std::string name;
    std::string description;
    Mapping mapping;
    FunctionClass expected = FunctionClass::Unknown;
    // Expected Bloch number under omega = 1/(1-|x|^2), omega_tilde = 1, when
    // a closed value is known; the note records how it was obtained.
    std::optional<double> expected_bloch_hyperbolic;
    std::string expectation_note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view name);

// Boundedness sweep: sup estimates of the Bloch quantity (1-|x|^2) d_f(x) and
// the spherical quantity (1-|x|^2) d_f(x) / (1+|f(x)|^2) over balls of radius
// 1 - 2^-j. Bounded means the estimates plateau; unbounded means they grow
// past the divergence threshold or overflow.
struct RadiusRow {
    int j = 0;
    double radius = 0.0;
    double bloch_quantity = 0.0;
    double spherical_quantity = 0.0;
    bool bloch_overflow = false;      // +inf or skipped samples in the sweep
    bool spherical_overflow = false;
};

struct ClassifyBudgets {
    int j_min = 3;
    int j_max = 10;
    std::size_t samples_per_radius = 2000;
    std::uint64_t seed = 1;
    double plateau_rel = 0.05;        // max relative variation over the last three radii
    double divergence_factor = 1e3;   // growth beyond first-radius value counts as divergence
    int top_k = 8;
};

struct ClassificationReport {
    std::string entry;
    std::vector<RadiusRow> rows;
    bool bloch_bounded = false;
    bool normal_bounded = false;
    FunctionClass verdict = FunctionClass::Unknown;
    std::optional<double> bloch_divergence_radius;  // first radius with overflow/divergence
};

ClassificationReport classify(const CatalogEntry& entry, const ClassifyBudgets& budgets = {});

}  // namespace blochlip
