#include "chshq/geometry.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "chshq/parallel.hpp"

namespace chshq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SlopeIntercept {
    std::uint64_t slope;
    std::uint64_t intercept;
    bool operator==(const SlopeIntercept& o) const {
        return slope == o.slope && intercept == o.intercept;
    }
};

struct SlopeInterceptHash {
    std::size_t operator()(const SlopeIntercept& k) const {
        return splitmix64(k.slope) ^ splitmix64(~k.intercept);
    }
};

void require_same_modulus(const PointSet& P, const LineSet& L) {
    if (P.p != L.p) throw std::invalid_argument("point and line sets use different moduli");
}

}  // namespace

bool on_line(AffinePoint pt, AffineLine ln, PrimeModulus p) {
    return pt.h == fadd(fmul(ln.slope, pt.x, p), ln.intercept, p);
}

std::uint64_t count_incidences(const PointSet& P, const LineSet& L, unsigned threads) {
    require_same_modulus(P, L);
    const PrimeModulus p = P.p;

    std::unordered_map<SlopeIntercept, std::uint32_t, SlopeInterceptHash> line_count;
    line_count.reserve(L.lines.size());
    std::unordered_set<std::uint64_t> slope_seen;
    std::vector<std::uint64_t> slopes;
    for (const AffineLine& ln : L.lines) {
        ++line_count[SlopeIntercept{ln.slope, ln.intercept}];
        if (slope_seen.insert(ln.slope).second) slopes.push_back(ln.slope);
    }

    auto partials = run_chunked<std::uint64_t>(
        P.points.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t acc = 0;
            for (std::uint64_t i = b; i < e; ++i) {
                const AffinePoint pt = P.points[i];
                for (std::uint64_t s : slopes) {
                    // pt lies on a slope-s line iff that line's intercept is
                    // h - s*x.
                    SlopeIntercept key{s, fsub(pt.h, fmul(s, pt.x, p), p)};
                    auto it = line_count.find(key);
                    if (it != line_count.end()) acc += it->second;
                }
            }
            return acc;
        });
    return std::accumulate(partials.begin(), partials.end(), std::uint64_t{0});
}

std::uint64_t count_incidences_direct(const PointSet& P, const LineSet& L) {
    require_same_modulus(P, L);
    std::uint64_t count = 0;
    for (const AffinePoint& pt : P.points)
        for (const AffineLine& ln : L.lines)
            if (on_line(pt, ln, P.p)) ++count;
    return count;
}

std::pair<PointSet, LineSet> strategy_to_geometry(const DeterministicStrategy& s) {
    validate_strategy(s);
    const std::uint64_t q = s.q.value();
    PointSet P{s.q, {}};
    LineSet L{s.q, {}};
    P.points.reserve(q);
    L.lines.reserve(q);
    for (std::uint64_t x = 0; x < q; ++x) P.points.push_back({x, s.alice[x]});
    for (std::uint64_t y = 0; y < q; ++y) L.lines.push_back({y, fneg(s.bob[y], s.q)});
    return {std::move(P), std::move(L)};
}

AmbiguityFlags validate_unambiguous(const PointSet& P, const LineSet& L) {
    std::unordered_map<std::uint64_t, std::uint64_t> x_hist, slope_hist;
    x_hist.reserve(P.points.size());
    slope_hist.reserve(L.lines.size());
    for (const AffinePoint& pt : P.points) ++x_hist[pt.x];
    for (const AffineLine& ln : L.lines) ++slope_hist[ln.slope];

    AmbiguityFlags flags;
    for (const auto& [x, n] : x_hist)
        if (n >= 2) flags.duplicate_x_count += n;
    for (const auto& [s, n] : slope_hist)
        if (n >= 2) flags.duplicate_slope_count += n;
    return flags;
}

DeterministicStrategy geometry_to_strategy(const PointSet& P, const LineSet& L, PrimeModulus q) {
    require_same_modulus(P, L);
    if (P.p != q) throw std::invalid_argument("geometry modulus does not match q");
    AmbiguityFlags flags = validate_unambiguous(P, L);
    if (!flags.unambiguous()) throw AmbiguityError(flags);

    DeterministicStrategy s{q, std::vector<FieldElement>(q.value(), 0),
                            std::vector<FieldElement>(q.value(), 0)};
    for (const AffinePoint& pt : P.points) {
        if (pt.x >= q.value() || pt.h >= q.value())
            throw std::invalid_argument("non-canonical point");
        s.alice[pt.x] = pt.h;
    }
    for (const AffineLine& ln : L.lines) {
        if (ln.slope >= q.value() || ln.intercept >= q.value())
            throw std::invalid_argument("non-canonical line");
        s.bob[ln.slope] = fneg(ln.intercept, q);
    }
    return s;
}

}  // namespace chshq
