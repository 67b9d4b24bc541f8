#pragma once

#include <cstdint>
#include <vector>

#include "chshq/construction.hpp"
#include "chshq/rational.hpp"

namespace chshq {

/// Step-length bands of the duplicate-slope equation k*b == p2 - y. In the
/// middle band the step is wider than the target interval but too short to
/// complete a field cycle, so at most one solution can exist.
enum class Band { Small, Middle, Large };

Band band_of(FieldElement k, const ConstructionParams& params);

/// All in-range grid pairs (y, b) with k*b == p2 - y (mod p). At most one b
/// per y since k is invertible, so at most p1/2 solutions.
struct SlopeEquationRecord {
    FieldElement k = 0;
    Band band = Band::Small;
    std::vector<GridLine> solutions;
};

/// Throws std::domain_error on k = 0: the substitution k = 2*p2/k' that
/// produces the equation is undefined for slope 0, which is audited as its
/// own family (all b = 0 lines).
SlopeEquationRecord solutions_for_k(FieldElement k, const ConstructionParams& params);

struct AuditReport {
    std::uint64_t p = 0, p1 = 0, p2 = 0;

    std::uint64_t lines_total = 0;            // p1*p2/4
    std::uint64_t lines_kept = 0;             // distinct slopes
    std::uint64_t slope_zero_family = 0;      // b = 0 lines, all with slope 0 (= p1/2)
    std::uint64_t slope_zero_duplicates = 0;  // members of that family counted into
                                              // r_emp (p1/2 when the family collides,
                                              // i.e. p1 >= 4; one is kept by dedup)
    std::uint64_t r_emp = 0;                  // every member of every colliding family

    std::uint64_t middle_band_violations = 0;  // expected 0
    bool census_match = false;  // slope census == k-equation census, line for line

    Rational r_small_bound;  // p1^2/4
    Rational r_large_bound;  // p1^3/6
    Rational r_total_bound;  // their exact sum
    Rational r_final_bound;  // p1*p2/5
    bool r_final_valid = false;  // p1 > 30
    Rational kept_floor;         // p1*p2/20
};

Rational r_small_bound(const ConstructionParams& params);
Rational r_large_bound(const ConstructionParams& params);
Rational r_total_bound(const ConstructionParams& params);
Rational r_final_bound(const ConstructionParams& params);

/// Duplicate-slope census from the actual transformed lines, cross-checked
/// against the k-equation census (k = 2*p2/k' maps nonzero slopes k' to
/// step lengths k bijectively). k ranges are sharded over threads; all
/// merged quantities are additive.
AuditReport audit(const ConstructionParams& params, unsigned threads = 0);

/// Per-k census row for CSV export, ascending k over [1, p).
struct KCensusRow {
    std::uint64_t k = 0;
    Band band = Band::Small;
    std::uint64_t solution_count = 0;
};

std::vector<KCensusRow> k_census(const ConstructionParams& params);

const char* band_name(Band band);

}  // namespace chshq
