#include "chshq/oracle.hpp"

#include <cmath>

#include "chshq/parallel.hpp"

namespace chshq {

namespace {

// Wins of alice + best-response bob, reusing caller-owned buffers; bob_out
// receives the response table.
std::uint64_t best_response_into(const std::vector<FieldElement>& alice, std::uint64_t q,
                                 std::vector<std::uint32_t>& hist,
                                 std::vector<FieldElement>& bob_out) {
    std::uint64_t total = 0;
    for (std::uint64_t y = 0; y < q; ++y) {
        hist.assign(q, 0);
        std::uint64_t t = 0;  // x*y mod q, walked incrementally
        for (std::uint64_t x = 0; x < q; ++x) {
            // bob wins (x, y) with b == x*y - alice[x]
            std::uint64_t need = t >= alice[x] ? t - alice[x] : t + q - alice[x];
            ++hist[need];
            t += y;
            if (t >= q) t -= q;
        }
        std::uint32_t best_count = 0;
        std::uint64_t best_b = 0;
        for (std::uint64_t b = 0; b < q; ++b) {
            if (hist[b] > best_count) {
                best_count = hist[b];
                best_b = b;
            }
        }
        bob_out[y] = best_b;
        total += best_count;
    }
    return total;
}

// Alice table for a lexicographic index: most significant digit first.
std::vector<FieldElement> table_for_index(std::uint64_t index, std::uint64_t q) {
    std::vector<FieldElement> table(q, 0);
    for (std::uint64_t i = q; i-- > 0;) {
        table[i] = index % q;
        index /= q;
    }
    return table;
}

bool increment_table(std::vector<FieldElement>& table, std::uint64_t q) {
    for (std::size_t i = table.size(); i-- > 0;) {
        if (++table[i] < q) return true;
        table[i] = 0;
    }
    return false;  // wrapped past the last table
}

}  // namespace

std::pair<std::vector<FieldElement>, std::uint64_t> best_response_bob(
    const std::vector<FieldElement>& alice, PrimeModulus q) {
    const std::uint64_t qv = q.value();
    if (alice.size() != qv) throw std::invalid_argument("alice table must have q entries");
    std::vector<std::uint32_t> hist;
    std::vector<FieldElement> bob(qv, 0);
    std::uint64_t wins = best_response_into(alice, qv, hist, bob);
    return {std::move(bob), wins};
}

OracleResult optimal_classical_value(PrimeModulus q, std::uint64_t cap, unsigned threads) {
    const std::uint64_t qv = q.value();
    const double estimated = std::pow(static_cast<double>(qv), static_cast<double>(qv)) *
                             static_cast<double>(qv) * static_cast<double>(qv);
    if (qv > cap || qv > 15)  // q^q must stay in 64 bits regardless of the cap
        throw CapExceededError(qv, cap, estimated);

    std::uint64_t table_count = 1;
    for (std::uint64_t i = 0; i < qv; ++i) table_count *= qv;

    struct Partial {
        std::uint64_t max_wins = 0;
        std::uint64_t witness_index = 0;
        std::vector<FieldElement> witness_alice;
    };
    auto partials = run_chunked<Partial>(
        table_count, threads, [&](std::uint64_t begin, std::uint64_t end) {
            Partial part;
            std::vector<FieldElement> alice = table_for_index(begin, qv);
            std::vector<std::uint32_t> hist;
            std::vector<FieldElement> bob(qv, 0);
            for (std::uint64_t index = begin; index < end; ++index) {
                std::uint64_t wins = best_response_into(alice, qv, hist, bob);
                if (wins > part.max_wins) {
                    part.max_wins = wins;
                    part.witness_index = index;
                    part.witness_alice = alice;
                }
                increment_table(alice, qv);
            }
            return part;
        });

    const Partial* best = &partials.front();
    for (const Partial& part : partials)
        if (part.max_wins > best->max_wins) best = &part;  // earlier shard wins ties

    auto [bob, wins] = best_response_bob(best->witness_alice, q);
    return OracleResult{qv, wins,
                        make_rational(static_cast<std::int64_t>(wins),
                                      static_cast<std::int64_t>(qv * qv)),
                        DeterministicStrategy{q, best->witness_alice, std::move(bob)},
                        table_count};
}

}  // namespace chshq
