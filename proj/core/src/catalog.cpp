#include "blochlip/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "blochlip/dilatation.hpp"

namespace blochlip {

using Cx = std::complex<double>;

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::Bloch: return "bloch";
        case FunctionClass::Normal: return "normal";
        case FunctionClass::Both: return "both";
        case FunctionClass::Neither: return "neither";
        case FunctionClass::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    {
        CatalogEntry e;
        e.name = "identity";
        e.description = "z -> z on the unit disc";
        e.mapping = Mapping::identity(2);
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = 1.0;
        e.expectation_note = "sup of 1-|z|^2 is 1, attained at the origin";
        entries.push_back(e);
    }
    {
        const Cx a{0.6, -0.3};
        const Cx b{0.1, 0.2};
        CatalogEntry e;
        e.name = "linear";
        e.description = "z -> a z + b with a = 0.6 - 0.3i, b = 0.1 + 0.2i";
        e.mapping = Mapping::analytic([a, b](Cx z) { return a * z + b; }, [a](Cx) { return a; });
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = std::abs(a);
        e.expectation_note = "linear map: quotient is |a| everywhere, sup weight ratio 1 at 0";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "log";
        e.description = "z -> log(1/(1-z)) on the unit disc";
        // Re(1-z) > 0 on the disc, so the principal branch never jumps.
        e.mapping = Mapping::analytic([](Cx z) { return -std::log(1.0 - z); },
                                      [](Cx z) { return 1.0 / (1.0 - z); });
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = 2.0;
        e.expectation_note =
            "sup of (1-|z|^2)/|1-z| <= 1+|z| equals 2, approached along the real axis toward 1";
        entries.push_back(e);
    }
    {
        const Cx a{0.4, 0.0};
        CatalogEntry e;
        e.name = "mobius";
        e.description = "disc automorphism z -> (a - z)/(1 - conj(a) z), a = 0.4";
        e.mapping = Mapping::analytic(
            [a](Cx z) { return (a - z) / (1.0 - std::conj(a) * z); },
            [a](Cx z) {
                const Cx d = 1.0 - std::conj(a) * z;
                return (std::norm(a) - 1.0) / (d * d);
            });
        e.mapping.target = DomainDescriptor::ball(2);
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = 1.0;
        e.expectation_note =
            "(1-|z|^2)|f'(z)| = 1 - |f(z)|^2 for disc automorphisms; sup 1 attained at z = a";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "exp_cayley";
        e.description = "z -> exp((1+z)/(1-z)), essential growth toward z = 1";
        e.mapping = Mapping::analytic(
            [](Cx z) { return std::exp((1.0 + z) / (1.0 - z)); },
            [](Cx z) {
                const Cx d = 1.0 - z;
                return std::exp((1.0 + z) / d) * 2.0 / (d * d);
            });
        e.expected = FunctionClass::Normal;
        e.expectation_note =
            "numerical radius sweep: Bloch quantity 2u e^u with u = (1-|z|^2)/|1-z|^2 diverges; "
            "spherical quantity u sech(u) plateaus near 0.6627";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "square3d";
        e.description = "x -> (x1^2, x2^2, x3^2)/2 on the unit ball of R^3";
        Mapping m;
        m.eval = [](const Point& p) {
            Point q(3);
            for (int i = 0; i < 3; ++i) q[i] = 0.5 * p[i] * p[i];
            return q;
        };
        // Jacobian is diag(x1, x2, x3); operator norm max_i |x_i|.
        m.dilatation_oracle = [](const Point& p) {
            return std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
        };
        m.source = DomainDescriptor::ball(3);
        m.target = DomainDescriptor::full_space(3);
        e.mapping = m;
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = 2.0 / (3.0 * std::sqrt(3.0));
        e.expectation_note = "max of (1-r^2) r at r = 1/sqrt(3) along an axis";
        entries.push_back(e);
    }
    {
        CatalogEntry e;
        e.name = "constant";
        e.description = "z -> 0.3 - 0.2i";
        e.mapping = Mapping::constant(Point::xy(0.3, -0.2), DomainDescriptor::ball(2));
        e.expected = FunctionClass::Both;
        e.expected_bloch_hyperbolic = 0.0;
        e.expectation_note = "zero numerator everywhere";
        entries.push_back(e);
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

bool plateaued(const std::vector<double>& values, double rel) {
    if (values.size() < 3) return false;
    const std::size_t n = values.size();
    double lo = values[n - 3], hi = values[n - 3];
    for (std::size_t i = n - 3; i < n; ++i) {
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
    }
    if (hi == 0.0) return true;  // identically zero sweep (constant maps)
    return (hi - lo) / hi <= rel;
}

}  // namespace

ClassificationReport classify(const CatalogEntry& entry, const ClassifyBudgets& budgets) {
    ClassificationReport report;
    report.entry = entry.name;
    const Mapping& f = entry.mapping;
    const int dim = f.source.dim;

    auto bloch_quantity = [&](const Point& x) -> double {
        const double df = local_dilatation(f, x).value;
        const double v = (1.0 - x.norm_sq()) * df;
        return v;  // +inf propagates as overflow evidence
    };
    auto spherical_quantity = [&](const Point& x) -> double {
        const double df = local_dilatation(f, x).value;
        const Point fx = f(x);
        if (!fx.all_finite()) {
            // 1/(1+|f|^2) underflows faster than any finite dilatation grows;
            // when both overflow the sample carries no information.
            return std::isinf(df) ? std::numeric_limits<double>::quiet_NaN() : 0.0;
        }
        const double v = (1.0 - x.norm_sq()) * df / (1.0 + fx.norm_sq());
        return v;
    };

    std::vector<double> bloch_values, spherical_values;
    for (int j = budgets.j_min; j <= budgets.j_max; ++j) {
        RadiusRow row;
        row.j = j;
        row.radius = 1.0 - std::pow(2.0, -j);
        SamplePlan plan;
        plan.count = budgets.samples_per_radius;
        plan.seed = budgets.seed + static_cast<std::uint64_t>(j);
        plan.safe_radius = row.radius;
        plan.top_k = budgets.top_k;

        const SeminormEstimate be = sup_over_ball(bloch_quantity, dim, plan);
        row.bloch_quantity = be.value;
        row.bloch_overflow = std::isinf(be.value) || be.skipped > 0;
        const SeminormEstimate se = sup_over_ball(spherical_quantity, dim, plan);
        row.spherical_quantity = se.value;
        row.spherical_overflow = se.skipped > 0;

        if (row.bloch_overflow && !report.bloch_divergence_radius)
            report.bloch_divergence_radius = row.radius;
        bloch_values.push_back(row.bloch_quantity);
        spherical_values.push_back(row.spherical_quantity);
        report.rows.push_back(row);
    }

    const double first_bloch = bloch_values.front();
    const double bloch_max = *std::max_element(bloch_values.begin(), bloch_values.end());
    const bool diverged = std::isinf(bloch_max) ||
                          (first_bloch > 0.0 && bloch_max > budgets.divergence_factor * first_bloch);
    if (diverged && !report.bloch_divergence_radius) {
        for (const auto& row : report.rows)
            if (std::isinf(row.bloch_quantity) ||
                (first_bloch > 0.0 && row.bloch_quantity > budgets.divergence_factor * first_bloch)) {
                report.bloch_divergence_radius = row.radius;
                break;
            }
    }
    report.bloch_bounded = !diverged && plateaued(bloch_values, budgets.plateau_rel);
    report.normal_bounded = plateaued(spherical_values, budgets.plateau_rel) &&
                            std::isfinite(*std::max_element(spherical_values.begin(), spherical_values.end()));

    if (report.bloch_bounded && report.normal_bounded)
        report.verdict = FunctionClass::Both;
    else if (report.bloch_bounded)
        report.verdict = FunctionClass::Bloch;
    else if (report.normal_bounded)
        report.verdict = FunctionClass::Normal;
    else
        report.verdict = FunctionClass::Neither;
    return report;
}

}  // namespace blochlip
