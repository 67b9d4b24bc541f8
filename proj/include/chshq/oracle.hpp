#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chshq/game.hpp"
#include "chshq/prime_field.hpp"
#include "chshq/rational.hpp"

namespace chshq {

/// Exact optimum over all deterministic strategies, found by scanning every
/// Alice table with a best-response Bob.
struct OracleResult {
    std::uint64_t q;
    std::uint64_t max_wins;
    Rational optimal_value;  // max_wins / q^2
    DeterministicStrategy witness;
    std::uint64_t strategies_scanned;  // q^q Alice tables
};

class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::uint64_t q, std::uint64_t cap, double estimated_ops)
        : std::runtime_error("oracle scan refused: q exceeds cap"),
          q_(q), cap_(cap), estimated_ops_(estimated_ops) {}
    std::uint64_t q() const { return q_; }
    std::uint64_t cap() const { return cap_; }
    double estimated_ops() const { return estimated_ops_; }

private:
    std::uint64_t q_, cap_;
    double estimated_ops_;
};

/// For a fixed Alice table, the Bob table maximizing the win count, found
/// per y by an exact histogram over x (ties broken by smallest b). Returns
/// the table and its total wins.
std::pair<std::vector<FieldElement>, std::uint64_t> best_response_bob(
    const std::vector<FieldElement>& alice, PrimeModulus q);

/// Scans all q^q Alice tables in lexicographic order; the witness is the
/// first maximizer. Sharded into contiguous index ranges; the merge prefers
/// higher wins, then the earlier table, so results are identical for any
/// shard count. Throws CapExceededError (with a cost estimate) when q > cap.
OracleResult optimal_classical_value(PrimeModulus q, std::uint64_t cap = 7,
                                     unsigned threads = 0);

}  // namespace chshq
