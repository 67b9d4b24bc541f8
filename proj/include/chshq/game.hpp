#pragma once

#include <cstdint>
#include <vector>

#include "chshq/prime_field.hpp"
#include "chshq/rational.hpp"

namespace chshq {

/// One deterministic classical strategy: Alice answers alice[x] on input x,
/// Bob answers bob[y] on input y. Both tables have exactly q entries, all
/// canonical residues.
struct DeterministicStrategy {
    PrimeModulus q;
    std::vector<FieldElement> alice;
    std::vector<FieldElement> bob;
};

struct EvaluationReport {
    std::uint64_t q = 0;
    std::uint64_t win_count = 0;
    Rational win_probability;       // win_count / q^2, exact
    double elapsed_seconds = 0.0;   // informational only; never serialized
};

/// Winning condition of the game: a + b == x*y in F_q.
bool wins(FieldElement x, FieldElement y, FieldElement a, FieldElement b, PrimeModulus q);

/// Both players answer 0 on every input; wins exactly when x = 0 or y = 0.
DeterministicStrategy trivial_strategy(PrimeModulus q);

/// Throws std::invalid_argument unless both tables have q canonical entries.
void validate_strategy(const DeterministicStrategy& s);

/// Exact win count over all q^2 uniformly weighted input pairs. No sampling;
/// the grid may be sharded over threads, partial counts add up to the same
/// total for any thread count.
EvaluationReport evaluate(const DeterministicStrategy& s, unsigned threads = 0);

/// Wins restricted to inputs x in [x_begin, x_end), all y. Exposed so the
/// additive-partition property of the evaluator can be checked directly.
std::uint64_t win_count_x_range(const DeterministicStrategy& s, std::uint64_t x_begin,
                                std::uint64_t x_end);

/// 1/sqrt(q) + 1/q - 1/(q sqrt(q)); the known upper bound on the quantum
/// winning probability. Closed form, so any q >= 1 is accepted; non-prime q
/// is a formula value only.
double quantum_upper_bound(std::uint64_t q);

/// The constructive lower bound p^{-2/3}/22 on the classical winning
/// probability, as an exact integer win-count floor plus its decimal form.
struct GuaranteeBound {
    std::uint64_t win_floor = 0;   // exact integer lower bound on p^{4/3}/22
    double probability = 0.0;      // win_floor / p^2
    bool p1_above_30 = false;      // the bound's validity gate
    bool floor_is_exact = false;   // floor(p^{4/3}/22) itself vs. the
                                   // conservative floor(p*icbrt(p)/22)
};

GuaranteeBound classical_guarantee(PrimeModulus p);

}  // namespace chshq
