#include <doctest.h>

#include <random>

#include "chshq/oracle.hpp"

using namespace chshq;

namespace {

std::uint64_t wins_of(const DeterministicStrategy& s) { return evaluate(s).win_count; }

// Independent oracle for tiny q: enumerate BOTH tables outright.
std::uint64_t max_wins_by_double_enumeration(PrimeModulus q) {
    const std::uint64_t qv = q.value();
    std::uint64_t tables = 1;
    for (std::uint64_t i = 0; i < qv; ++i) tables *= qv;
    std::uint64_t best = 0;
    for (std::uint64_t ai = 0; ai < tables; ++ai) {
        DeterministicStrategy s{q, std::vector<FieldElement>(qv, 0),
                                std::vector<FieldElement>(qv, 0)};
        std::uint64_t rem = ai;
        for (std::uint64_t i = qv; i-- > 0;) {
            s.alice[i] = rem % qv;
            rem /= qv;
        }
        for (std::uint64_t bi = 0; bi < tables; ++bi) {
            rem = bi;
            for (std::uint64_t i = qv; i-- > 0;) {
                s.bob[i] = rem % qv;
                rem /= qv;
            }
            best = std::max(best, wins_of(s));
        }
    }
    return best;
}

// Naive best response: try every b for every y.
std::uint64_t best_response_by_all_b(const std::vector<FieldElement>& alice, PrimeModulus q) {
    const std::uint64_t qv = q.value();
    std::uint64_t total = 0;
    for (std::uint64_t y = 0; y < qv; ++y) {
        std::uint64_t best = 0;
        for (std::uint64_t b = 0; b < qv; ++b) {
            std::uint64_t count = 0;
            for (std::uint64_t x = 0; x < qv; ++x)
                if (wins(x, y, alice[x], b, q)) ++count;
            best = std::max(best, count);
        }
        total += best;
    }
    return total;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("best response on the all-zero Alice table") {
    auto [bob3, wins3] = best_response_bob({0, 0, 0}, PrimeModulus(3));
    CHECK(bob3 == std::vector<FieldElement>{0, 0, 0});
    CHECK(wins3 == 5);  // the trivial value 2q - 1

    auto [bob2, wins2] = best_response_bob({0, 0}, PrimeModulus(2));
    CHECK(bob2 == std::vector<FieldElement>{0, 0});
    CHECK(wins2 == 3);
}

TEST_CASE("histogram best response agrees with trying every b") {
    std::mt19937_64 rng(43);
    for (std::uint64_t qv : {2, 3, 5, 7}) {
        PrimeModulus q(qv);
        std::uniform_int_distribution<std::uint64_t> dist(0, qv - 1);
        for (int i = 0; i < 30; ++i) {
            std::vector<FieldElement> alice(qv);
            for (auto& a : alice) a = dist(rng);
            auto [bob, wins_hist] = best_response_bob(alice, q);
            CHECK(wins_hist == best_response_by_all_b(alice, q));
            CHECK(wins_of(DeterministicStrategy{q, alice, bob}) == wins_hist);
        }
    }
}

TEST_CASE("best response dominates the trivial value for the all-zero Alice") {
    for (std::uint64_t qv : {2, 3, 5, 7}) {
        PrimeModulus q(qv);
        auto [bob, wins] = best_response_bob(std::vector<FieldElement>(qv, 0), q);
        CHECK(wins >= 2 * qv - 1);
    }
}

TEST_CASE("optimal value at q = 2 is 3/4, the binary game's classical optimum") {
    OracleResult result = optimal_classical_value(PrimeModulus(2));
    CHECK(result.max_wins == 3);
    CHECK(result.strategies_scanned == 4);
    CHECK(result.optimal_value == make_rational(3, 4));
    CHECK(result.optimal_value == make_rational(12, 16));
    CHECK(wins_of(result.witness) == result.max_wins);
    CHECK(max_wins_by_double_enumeration(PrimeModulus(2)) == 3);
}

TEST_CASE("optimal value matches the double enumeration at q = 3") {
    OracleResult result = optimal_classical_value(PrimeModulus(3));
    CHECK(result.strategies_scanned == 27);
    CHECK(result.max_wins == max_wins_by_double_enumeration(PrimeModulus(3)));
    CHECK(result.max_wins == 6);  // frozen from the double enumeration
    CHECK(result.optimal_value == make_rational(2, 3));
    CHECK(wins_of(result.witness) == result.max_wins);
}

TEST_CASE("optimal value at q = 5 dominates the trivial strategy") {
    OracleResult result = optimal_classical_value(PrimeModulus(5));
    CHECK(result.strategies_scanned == 3125);
    CHECK(result.max_wins >= 9);
    CHECK(result.max_wins <= 25);
    CHECK(wins_of(result.witness) == result.max_wins);
}

TEST_CASE("no single Bob entry change improves the witness") {
    OracleResult result = optimal_classical_value(PrimeModulus(5));
    DeterministicStrategy witness = result.witness;
    for (std::uint64_t y = 0; y < 5; ++y) {
        for (FieldElement b = 0; b < 5; ++b) {
            DeterministicStrategy changed = witness;
            changed.bob[y] = b;
            CHECK(wins_of(changed) <= result.max_wins);
        }
    }
}

TEST_CASE("role-swapped scan reaches the same optimum (q = 2, 3)") {
    // The winning predicate is symmetric under (x,a) <-> (y,b); the double
    // enumeration is role-agnostic, so it certifies both directions.
    for (std::uint64_t qv : {2, 3}) {
        OracleResult result = optimal_classical_value(PrimeModulus(qv));
        CHECK(result.max_wins == max_wins_by_double_enumeration(PrimeModulus(qv)));
    }
}

TEST_CASE("scan is deterministic across thread counts") {
    OracleResult serial = optimal_classical_value(PrimeModulus(5), 7, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        OracleResult parallel = optimal_classical_value(PrimeModulus(5), 7, threads);
        CHECK(parallel.max_wins == serial.max_wins);
        CHECK(parallel.witness.alice == serial.witness.alice);
        CHECK(parallel.witness.bob == serial.witness.bob);
    }
}

TEST_CASE("cap refusal carries a cost estimate") {
    try {
        optimal_classical_value(PrimeModulus(11));
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.q() == 11);
        CHECK(e.cap() == 7);
        CHECK(e.estimated_ops() > 1e12);
    }
    CHECK_THROWS_AS(optimal_classical_value(PrimeModulus(17), 100), CapExceededError);
}

}  // TEST_SUITE
