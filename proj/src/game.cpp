#include "chshq/game.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chshq/parallel.hpp"

namespace chshq {

bool wins(FieldElement x, FieldElement y, FieldElement a, FieldElement b, PrimeModulus q) {
    return fadd(a, b, q) == fmul(x, y, q);
}

DeterministicStrategy trivial_strategy(PrimeModulus q) {
    std::vector<FieldElement> zeros(q.value(), 0);
    return DeterministicStrategy{q, zeros, zeros};
}

void validate_strategy(const DeterministicStrategy& s) {
    std::uint64_t q = s.q.value();
    if (s.alice.size() != q || s.bob.size() != q)
        throw std::invalid_argument("strategy tables must have exactly q entries");
    for (FieldElement v : s.alice)
        if (v >= q) throw std::invalid_argument("non-canonical residue in alice table");
    for (FieldElement v : s.bob)
        if (v >= q) throw std::invalid_argument("non-canonical residue in bob table");
}

std::uint64_t win_count_x_range(const DeterministicStrategy& s, std::uint64_t x_begin,
                                std::uint64_t x_end) {
    const std::uint64_t q = s.q.value();
    const FieldElement* bob = s.bob.data();
    std::uint64_t count = 0;
    for (std::uint64_t x = x_begin; x < x_end; ++x) {
        // Bob wins (x, y) iff bob[y] == x*y - alice[x]; walk that target
        // incrementally so the inner loop has no multiplication.
        std::uint64_t t = s.alice[x] == 0 ? 0 : q - s.alice[x];
        const std::uint64_t step = x;
        for (std::uint64_t y = 0; y < q; ++y) {
            count += (bob[y] == t);
            t += step;
            if (t >= q) t -= q;
        }
    }
    return count;
}

EvaluationReport evaluate(const DeterministicStrategy& s, unsigned threads) {
    validate_strategy(s);
    const std::uint64_t q = s.q.value();
    if (q > 3037000498)  // q^2 must stay in signed 64-bit range
        throw std::invalid_argument("q too large for exhaustive evaluation");
    auto start = std::chrono::steady_clock::now();

    auto partials = run_chunked<std::uint64_t>(
        q, threads,
        [&s](std::uint64_t b, std::uint64_t e) { return win_count_x_range(s, b, e); });
    std::uint64_t total = std::accumulate(partials.begin(), partials.end(), std::uint64_t{0});

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    EvaluationReport report;
    report.q = q;
    report.win_count = total;
    report.win_probability = make_rational(static_cast<std::int64_t>(total),
                                           static_cast<std::int64_t>(q * q));
    report.elapsed_seconds = elapsed.count();
    return report;
}

double quantum_upper_bound(std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("quantum_upper_bound requires q >= 1");
    double sq = std::sqrt(static_cast<double>(q));
    double qd = static_cast<double>(q);
    return 1.0 / sq + 1.0 / qd - 1.0 / (qd * sq);
}

GuaranteeBound classical_guarantee(PrimeModulus p) {
    const std::uint64_t pv = p.value();
    const std::uint64_t root = icbrt(pv);
    GuaranteeBound g;
    g.p1_above_30 = 2 * (root / 2) > 30;  // p1 = 2*floor(icbrt(p)/2)
    if (pv < (std::uint64_t{1} << 31)) {
        // floor(p^{4/3}/22) = floor(icbrt(p^4)/22), exact in 128 bits.
        unsigned __int128 p4 = static_cast<unsigned __int128>(pv) * pv;
        p4 *= p4;
        g.win_floor = icbrt_u128(p4) / 22;
        g.floor_is_exact = true;
    } else {
        // p^4 would need 248 bits; fall back to the slightly smaller but
        // still exact lower bound floor(p * icbrt(p) / 22).
        g.win_floor = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(pv) * root / 22);
        g.floor_is_exact = false;
    }
    g.probability = static_cast<double>(g.win_floor) /
                    (static_cast<double>(pv) * static_cast<double>(pv));
    return g;
}

}  // namespace chshq
