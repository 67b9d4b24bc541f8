#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chshq/game.hpp"
#include "chshq/prime_field.hpp"

namespace chshq {

struct AffinePoint {
    FieldElement x = 0;
    FieldElement h = 0;
};

/// Line h = slope * x + intercept over F_p. The game mapping houses the
/// sign: a line encoding Bob's answer b on input y has slope y and
/// intercept -b, so bob[y] = -intercept.
struct AffineLine {
    FieldElement slope = 0;
    FieldElement intercept = 0;
};

struct PointSet {
    PrimeModulus p;
    std::vector<AffinePoint> points;
};

struct LineSet {
    PrimeModulus p;
    std::vector<AffineLine> lines;
};

/// Census of strategy-ambiguity violations. Every member of a colliding
/// family is counted, so two identical lines contribute 2.
struct AmbiguityFlags {
    std::uint64_t duplicate_x_count = 0;
    std::uint64_t duplicate_slope_count = 0;
    bool unambiguous() const { return duplicate_x_count == 0 && duplicate_slope_count == 0; }
};

class AmbiguityError : public std::runtime_error {
public:
    explicit AmbiguityError(AmbiguityFlags flags)
        : std::runtime_error("point/line sets do not define an unambiguous strategy"),
          flags_(flags) {}
    AmbiguityFlags flags() const { return flags_; }

private:
    AmbiguityFlags flags_;
};

bool on_line(AffinePoint pt, AffineLine ln, PrimeModulus p);

/// Number of incident (point, line) pairs, counted by grouping lines under
/// a (slope, intercept) key. Shards over points; additive reduction.
std::uint64_t count_incidences(const PointSet& P, const LineSet& L, unsigned threads = 0);

/// Reference O(|P| * |L|) scan; must agree with count_incidences.
std::uint64_t count_incidences_direct(const PointSet& P, const LineSet& L);

/// Alice's table as points (x, alice[x]); Bob's table as lines with slope y
/// and intercept -bob[y].
std::pair<PointSet, LineSet> strategy_to_geometry(const DeterministicStrategy& s);

/// Inverse mapping with the 0 fallback on uncovered inputs. Throws
/// AmbiguityError (carrying the full collision census) when a point x or a
/// line slope repeats.
DeterministicStrategy geometry_to_strategy(const PointSet& P, const LineSet& L, PrimeModulus q);

AmbiguityFlags validate_unambiguous(const PointSet& P, const LineSet& L);

}  // namespace chshq
