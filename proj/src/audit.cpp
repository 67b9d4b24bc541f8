#include "chshq/audit.hpp"

#include <unordered_map>

#include "chshq/parallel.hpp"

namespace chshq {

Band band_of(FieldElement k, const ConstructionParams& params) {
    if (k < params.p1 / 2) return Band::Small;
    if (k <= 2 * params.p1) return Band::Middle;
    return Band::Large;
}

const char* band_name(Band band) {
    switch (band) {
        case Band::Small: return "small";
        case Band::Middle: return "middle";
        default: return "large";
    }
}

SlopeEquationRecord solutions_for_k(FieldElement k, const ConstructionParams& params) {
    if (k == 0) throw std::domain_error("k = 0 is outside the slope equation's domain");
    const PrimeModulus p = params.p;
    SlopeEquationRecord record{k, band_of(k, params), {}};
    const FieldElement inv_k = finv(k, p);
    for (std::uint64_t y = 0; y < params.p1 / 2; ++y) {
        FieldElement b = fmul(params.p2 - y, inv_k, p);
        if (b < params.p2 / 2) record.solutions.push_back({y, b});
    }
    return record;
}

Rational r_small_bound(const ConstructionParams& params) {
    return make_rational(static_cast<std::int64_t>(params.p1 * params.p1), 4);
}

Rational r_large_bound(const ConstructionParams& params) {
    return make_rational(static_cast<std::int64_t>(params.p1 * params.p1 * params.p1), 6);
}

Rational r_total_bound(const ConstructionParams& params) {
    return rational_add(r_small_bound(params), r_large_bound(params));
}

Rational r_final_bound(const ConstructionParams& params) {
    return make_rational(static_cast<std::int64_t>(params.p1 * params.p2), 5);
}

AuditReport audit(const ConstructionParams& params, unsigned threads) {
    const PrimeModulus p = params.p;
    const std::uint64_t pv = p.value();

    AuditReport report;
    report.p = pv;
    report.p1 = params.p1;
    report.p2 = params.p2;

    // Ground truth: the multiset of slopes actually produced by the
    // transformation.
    Grid grid = build_grid(params);
    std::unordered_map<std::uint64_t, std::uint64_t> slope_census;
    slope_census.reserve(grid.lines.size());
    for (GridLine l : grid.lines) ++slope_census[transform_line(l, params).slope];

    report.lines_total = grid.lines.size();
    report.lines_kept = slope_census.size();
    report.slope_zero_family = params.p1 / 2;
    report.slope_zero_duplicates = report.slope_zero_family >= 2 ? report.slope_zero_family : 0;
    for (const auto& [slope, count] : slope_census)
        if (count >= 2) report.r_emp += count;

    // Independent census via the k-equation, sharded over k. For each k the
    // matching slope is k' = 2*p2/k; multiplicities must agree line for line.
    struct Partial {
        std::uint64_t duplicate_mass = 0;
        std::uint64_t middle_violations = 0;
        std::uint64_t total_solutions = 0;
        bool match = true;
    };
    const std::uint64_t two_p2 = 2 * params.p2 % pv;
    auto partials = run_chunked<Partial>(
        pv - 1, threads, [&](std::uint64_t begin, std::uint64_t end) {
            Partial part;
            for (std::uint64_t i = begin; i < end; ++i) {
                const FieldElement k = i + 1;
                const FieldElement inv_k = finv(k, p);
                std::uint64_t count = 0;
                for (std::uint64_t y = 0; y < params.p1 / 2; ++y) {
                    FieldElement b = fmul(params.p2 - y, inv_k, p);
                    if (b < params.p2 / 2) ++count;
                }
                part.total_solutions += count;
                if (count >= 2) {
                    part.duplicate_mass += count;
                    if (band_of(k, params) == Band::Middle) ++part.middle_violations;
                }
                const FieldElement matching_slope = fmul(two_p2, inv_k, p);
                auto it = slope_census.find(matching_slope);
                const std::uint64_t census_count = it == slope_census.end() ? 0 : it->second;
                if (census_count != count) part.match = false;
            }
            return part;
        });

    std::uint64_t duplicate_mass = 0, total_solutions = 0;
    bool match = true;
    for (const Partial& part : partials) {
        duplicate_mass += part.duplicate_mass;
        report.middle_band_violations += part.middle_violations;
        total_solutions += part.total_solutions;
        match = match && part.match;
    }

    auto zero_it = slope_census.find(0);
    const std::uint64_t zero_count = zero_it == slope_census.end() ? 0 : zero_it->second;
    report.census_match = match && zero_count == report.slope_zero_family &&
                          total_solutions == report.lines_total - report.slope_zero_family &&
                          duplicate_mass + report.slope_zero_duplicates == report.r_emp;

    report.r_small_bound = r_small_bound(params);
    report.r_large_bound = r_large_bound(params);
    report.r_total_bound = r_total_bound(params);
    report.r_final_bound = r_final_bound(params);
    report.r_final_valid = params.p1_gt_30;
    report.kept_floor = make_rational(static_cast<std::int64_t>(params.p1 * params.p2), 20);
    return report;
}

std::vector<KCensusRow> k_census(const ConstructionParams& params) {
    const PrimeModulus p = params.p;
    std::vector<KCensusRow> rows;
    rows.reserve(p.value() - 1);
    for (FieldElement k = 1; k < p.value(); ++k) {
        const FieldElement inv_k = finv(k, p);
        std::uint64_t count = 0;
        for (std::uint64_t y = 0; y < params.p1 / 2; ++y) {
            FieldElement b = fmul(params.p2 - y, inv_k, p);
            if (b < params.p2 / 2) ++count;
        }
        rows.push_back({k, band_of(k, params), count});
    }
    return rows;
}

}  // namespace chshq
