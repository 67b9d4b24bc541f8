#include "chshq/construction.hpp"

#include <unordered_map>

namespace chshq {

ConstructionParams derive_params(PrimeModulus p) {
    const std::uint64_t pv = p.value();
    const std::uint64_t p1 = 2 * (icbrt(pv) / 2);
    if (p1 < 2) throw ConstructionUnsupportedError(pv);
    const std::uint64_t p2 = 2 * (pv / (2 * p1));

    ConstructionParams params{p};
    params.p1 = p1;
    params.p2 = p2;
    params.bound_p1sq_lt_p2 = p1 * p1 < p2;
    params.bound_sandwich = (pv - 2 * p1 < p1 * p2) && (p1 * p2 < pv);
    params.p1_gt_30 = p1 > 30;
    return params;
}

bool guarantee_gate(const ConstructionParams& params) {
    return params.p1_gt_30 && params.p1 * params.p1 <= params.p2 && params.bound_sandwich;
}

Grid build_grid(const ConstructionParams& params) {
    Grid grid;
    grid.points.reserve(params.p1 * params.p2);
    for (std::uint64_t x = 0; x < params.p1; ++x)
        for (std::uint64_t a = 0; a < params.p2; ++a) grid.points.push_back({x, a});
    grid.lines.reserve(params.p1 * params.p2 / 4);
    for (std::uint64_t y = 0; y < params.p1 / 2; ++y)
        for (std::uint64_t b = 0; b < params.p2 / 2; ++b) grid.lines.push_back({y, b});
    return grid;
}

std::uint64_t grid_incidences(const ConstructionParams& params) {
    // The grid holds every (x, a) with a < p2, so a line meets it once per
    // x with y*x + b in range.
    std::uint64_t count = 0;
    for (std::uint64_t y = 0; y < params.p1 / 2; ++y)
        for (std::uint64_t b = 0; b < params.p2 / 2; ++b)
            for (std::uint64_t x = 0; x < params.p1; ++x)
                if (y * x + b < params.p2) ++count;
    return count;
}

AffinePoint transform_point(GridPoint g, const ConstructionParams& params) {
    if (g.x == 0 && g.a == 0)
        throw std::domain_error("the point (0,0) is excluded from the transformation");
    const PrimeModulus p = params.p;
    // p2*x - a stays below p (p1*p2 < p), so one fsub canonicalizes it.
    FieldElement denom = fsub(params.p2 * g.x % p.value(),
                              static_cast<FieldElement>(g.a), p);
    FieldElement inv = finv(denom, p);
    FieldElement h = fadd(1, fmul(2 * g.a % p.value(), inv, p), p);
    return AffinePoint{inv, h};
}

AffineLine transform_line(GridLine l, const ConstructionParams& params) {
    const PrimeModulus p = params.p;
    FieldElement inv = finv(params.p2 - l.y, p);  // 0 < p2 - y < p
    FieldElement slope = fmul(fmul(2 * params.p2 % p.value(),
                                   static_cast<FieldElement>(l.b), p), inv, p);
    FieldElement intercept = fmul((params.p2 + l.y) % p.value(), inv, p);
    return AffineLine{slope, intercept};
}

std::vector<TaggedLine> transform_lines(const std::vector<GridLine>& lines,
                                        const ConstructionParams& params) {
    std::vector<TaggedLine> out;
    out.reserve(lines.size());
    for (GridLine l : lines) out.push_back({transform_line(l, params), l});
    return out;
}

LineSet dedup_lines(const std::vector<TaggedLine>& lines, PrimeModulus p) {
    // index of the winning line per slope
    std::unordered_map<std::uint64_t, std::size_t> best;
    best.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto [it, inserted] = best.try_emplace(lines[i].line.slope, i);
        if (inserted) continue;
        const GridLine cur = lines[it->second].source;
        const GridLine cand = lines[i].source;
        if (cand.y < cur.y || (cand.y == cur.y && cand.b < cur.b)) it->second = i;
    }
    LineSet kept{p, {}};
    kept.lines.reserve(best.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto it = best.find(lines[i].line.slope);
        if (it != best.end() && it->second == i) kept.lines.push_back(lines[i].line);
    }
    return kept;
}

ConstructionArtifacts construct_strategy(PrimeModulus p) {
    ConstructionParams params = derive_params(p);
    Grid grid = build_grid(params);

    PointSet points{p, {}};
    points.points.reserve(grid.points.size() - 1);
    for (GridPoint g : grid.points) {
        if (g.x == 0 && g.a == 0) continue;
        points.points.push_back(transform_point(g, params));
    }
    LineSet kept = dedup_lines(transform_lines(grid.lines, params), p);
    DeterministicStrategy strategy = geometry_to_strategy(points, kept, p);

    ConstructionArtifacts artifacts{params, std::move(points), std::move(kept),
                                    std::move(strategy)};
    artifacts.lines_total = grid.lines.size();
    artifacts.pre_incidences = grid_incidences(params);
    return artifacts;
}

std::pair<DeterministicStrategy, ConstructionReport> build_strategy(PrimeModulus p,
                                                                    unsigned threads) {
    ConstructionArtifacts art = construct_strategy(p);

    ConstructionReport report{art.params};
    report.pre_incidences = art.pre_incidences;
    report.lines_total = art.lines_total;
    report.lines_kept = art.kept_lines.lines.size();
    report.lines_removed = report.lines_total - report.lines_kept;
    report.post_incidence_count = count_incidences(art.points, art.kept_lines, threads);
    report.win_count = evaluate(art.strategy, threads).win_count;
    report.guarantee_floor = classical_guarantee(p).win_floor;
    report.guarantee_applies = guarantee_gate(art.params);
    return {std::move(art.strategy), report};
}

FieldElement alice_rule(FieldElement x, const ConstructionParams& params) {
    if (x == 0) return 0;
    const PrimeModulus p = params.p;
    const std::uint64_t pv = p.value();
    const std::uint64_t p2 = params.p2;
    const std::uint64_t v = finv(x, p);

    // Solve v == p2*x' - a' (mod p) with (x', a') in the grid. The grid
    // values split into two integer bands: p2*x' - a' in [1, p2*(p1-1)] for
    // x' >= 1, and p - a' in (p - p2, p) for the x' = 0 column.
    std::uint64_t xp, ap;
    if (v > pv - p2) {
        xp = 0;
        ap = pv - v;
    } else {
        const std::uint64_t quot = v / p2, rem = v % p2;
        if (rem == 0) {
            xp = quot;
            ap = 0;
        } else {
            xp = quot + 1;
            ap = p2 - rem;
        }
        if (xp >= params.p1) return 0;
    }
    // finv(p2*x' - a') == x, so the transformed point is (x, 1 + 2a'x).
    return fadd(1, fmul(2 * ap % pv, x, p), p);
}

FieldElement bob_rule(FieldElement beta, const ConstructionParams& params) {
    const PrimeModulus p = params.p;
    const std::uint64_t p2 = params.p2;
    const FieldElement inv_2p2 = finv(2 * p2 % p.value(), p);
    for (std::uint64_t y = 0; y < params.p1 / 2; ++y) {
        // b' in [0, p2/2) is exactly the condition for (y, b') to be a grid
        // line whose transform has slope beta.
        FieldElement b = fmul(fmul(beta, p2 - y, p), inv_2p2, p);
        if (b < p2 / 2)
            return fneg(fmul((p2 + y) % p.value(), finv(p2 - y, p), p), p);
    }
    return 0;
}

}  // namespace chshq
