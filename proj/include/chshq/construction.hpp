#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chshq/game.hpp"
#include "chshq/geometry.hpp"
#include "chshq/prime_field.hpp"

namespace chshq {

/// p1 = 2*floor(icbrt(p)/2), p2 = 2*floor(p/(2*p1)); both even. The three
/// flags record the inequalities the incidence bound rests on:
///   p1^2 < p2   and   p - 2*p1 < p1*p2 < p,
/// plus the p1 > 30 gate. They are advisory; the pipeline runs regardless
/// and bound claims are gated on them.
struct ConstructionParams {
    PrimeModulus p;
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;
    bool bound_p1sq_lt_p2 = false;  // strict p1^2 < p2
    bool bound_sandwich = false;    // p - 2*p1 < p1*p2 < p
    bool p1_gt_30 = false;
};

/// Integer grid point, x in [0, p1), a in [0, p2).
struct GridPoint {
    std::uint64_t x = 0;
    std::uint64_t a = 0;
};

/// Integer grid line a = y*x + b, y in [0, p1/2), b in [0, p2/2).
struct GridLine {
    std::uint64_t y = 0;
    std::uint64_t b = 0;
};

struct Grid {
    std::vector<GridPoint> points;  // lexicographic (x, a)
    std::vector<GridLine> lines;    // lexicographic (y, b)
};

/// A transformed line still tagged with its source grid line; slope
/// deduplication keys on the source.
struct TaggedLine {
    AffineLine line;
    GridLine source;
};

struct ConstructionReport {
    ConstructionParams params;
    std::uint64_t pre_incidences = 0;  // counted on the integer grid; equals p1^2*p2/4
    std::uint64_t lines_total = 0;     // p1*p2/4
    std::uint64_t lines_kept = 0;
    std::uint64_t lines_removed = 0;
    std::uint64_t post_incidence_count = 0;  // surviving points x kept lines
    std::uint64_t win_count = 0;
    std::uint64_t guarantee_floor = 0;  // exact integer floor of p^{4/3}/22
    bool guarantee_applies = false;     // p1 > 30 and p1^2 <= p2 and sandwich
};

class ConstructionUnsupportedError : public std::runtime_error {
public:
    explicit ConstructionUnsupportedError(std::uint64_t p)
        : std::runtime_error("construction needs p >= 8 (p1 >= 2); use the trivial strategy"),
          p_(p) {}
    std::uint64_t p() const { return p_; }

private:
    std::uint64_t p_;
};

/// Throws ConstructionUnsupportedError when p1 would be < 2 (p < 8).
ConstructionParams derive_params(PrimeModulus p);

/// Non-strict variant of the inequality gate used when deciding whether the
/// final 1/22 guarantee is claimed; the report still records the strict flag.
bool guarantee_gate(const ConstructionParams& params);

Grid build_grid(const ConstructionParams& params);

/// Incidences of the integer grid (a == y*x + b, no wraparound).
std::uint64_t grid_incidences(const ConstructionParams& params);

/// (x, a) -> ( 1/(p2*x - a), 1 + 2a/(p2*x - a) ) over F_p. The point (0,0)
/// is the single point the map is undefined on; throws std::domain_error.
AffinePoint transform_point(GridPoint g, const ConstructionParams& params);

/// (y, b) -> ( 2*p2*b/(p2 - y), (p2 + y)/(p2 - y) ) over F_p. Always
/// defined: 0 < p2 - y < p.
AffineLine transform_line(GridLine l, const ConstructionParams& params);

std::vector<TaggedLine> transform_lines(const std::vector<GridLine>& lines,
                                        const ConstructionParams& params);

/// For each slope keeps exactly the line with the smallest source y (ties
/// broken by smallest b); output preserves input order. The same choice the
/// closed-form Bob rule makes, so tables and rules agree.
LineSet dedup_lines(const std::vector<TaggedLine>& lines, PrimeModulus p);

/// The full pipeline without counting: derive -> grid -> transform
/// (dropping (0,0)) -> dedup -> strategy with 0 fallback.
struct ConstructionArtifacts {
    ConstructionParams params;
    PointSet points;     // p1*p2 - 1 transformed points, grid order
    LineSet kept_lines;  // deduplicated transformed lines, grid order
    DeterministicStrategy strategy;
    std::uint64_t lines_total = 0;
    std::uint64_t pre_incidences = 0;
};

ConstructionArtifacts construct_strategy(PrimeModulus p);

/// Pipeline plus exhaustive evaluation and incidence counting.
std::pair<DeterministicStrategy, ConstructionReport> build_strategy(PrimeModulus p,
                                                                    unsigned threads = 0);

/// Closed-form per-input rules equivalent to the pipeline tables.
FieldElement alice_rule(FieldElement x, const ConstructionParams& params);
FieldElement bob_rule(FieldElement beta, const ConstructionParams& params);

}  // namespace chshq
