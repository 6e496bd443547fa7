#include <random>

#include <stdexcept>

#include "doctest.h"
#include "gfib/completeness.hpp"
#include "oracles.hpp"

using namespace gfib;

TEST_CASE("scan verdicts on known parameters") {
    CHECK(is_complete_scan(classify(1, 4, 7)).complete);
    CHECK(!is_complete_scan(classify(1, -1, 11)).complete);  // Fibonacci, p > 7
    CHECK(!is_complete_scan(classify(1, 1, 5)).complete);
    CHECK(is_complete_scan(classify(2, 1, 5)).complete);
    CHECK(is_complete_scan(classify(1, -1, 5)).complete);   // Fibonacci is complete mod 5
    CHECK(is_complete_scan(classify(1, -1, 7)).complete);   // ... and mod 7
    CHECK(!is_complete_scan(classify(5, 10, 5)).complete);  // p | gcd(P,Q)
    CHECK(is_complete_scan(classify(2, 5, 5)).complete);    // p | Q, P primitive root
}

TEST_CASE("scan agrees with the window-walk oracle") {
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (uint64_t P = 0; P < p; ++P) {
            for (uint64_t Q = 0; Q < p; ++Q) {
                const bool expected = oracle::complete_mod(static_cast<int64_t>(P),
                                                           static_cast<int64_t>(Q), p);
                CHECK(is_complete_scan(classify_unchecked(static_cast<int64_t>(P),
                                                          static_cast<int64_t>(Q), p))
                          .complete == expected);
            }
        }
    }
}

TEST_CASE("scan attaches a profile when it closes the period") {
    const CompletenessVerdict v = is_complete_scan(classify(7, 1, 23), true);
    CHECK(!v.complete);
    REQUIRE(v.profile.has_value());
    const PeriodProfile direct = pisano_period(classify(7, 1, 23), false);
    CHECK(v.profile->pi == direct.pi);
    CHECK(v.profile->rho == direct.rho);
    CHECK(v.profile->u == direct.u);
    CHECK(v.profile->ord_q == direct.ord_q);
}

TEST_CASE("fast path on the named examples") {
    const CompletenessVerdict v1 = is_complete_fast(classify(7, 1, 23));
    CHECK(!v1.complete);
    CHECK(v1.decided_by == DecisionPath::TheoremQ1);

    const CompletenessVerdict v2 = is_complete_fast(classify(1, 4, 7));
    CHECK(v2.complete);
    CHECK(v2.decided_by == DecisionPath::Uniform1);  // ord_7(4) = 3 = (p-1)/2

    const CompletenessVerdict v3 = is_complete_fast(classify(3, 2, 7));
    CHECK(!v3.complete);
    CHECK(v3.decided_by == DecisionPath::CaseI);

    // genuine scan fallthrough: ord_13(3) = 3, not in {12, 6}
    const CompletenessVerdict v4 = is_complete_fast(classify(1, 3, 13));
    CHECK(v4.decided_by == DecisionPath::Scan);

    const CompletenessVerdict v5 = is_complete_fast(classify(2, 1, 11));
    CHECK(v5.complete);
    CHECK(v5.decided_by == DecisionPath::CaseII);

    const CompletenessVerdict v6 = is_complete_fast(classify(0, -2, 11));
    CHECK(v6.decided_by == DecisionPath::SpecialP0);
    CHECK(v6.complete == is_primitive_root(FpElem(2, 11)));

    const CompletenessVerdict v7 = is_complete_fast(classify(2, 0, 11));
    CHECK(v7.decided_by == DecisionPath::SpecialQ0);
    CHECK(v7.complete == is_primitive_root(FpElem(2, 11)));

    const CompletenessVerdict v8 = is_complete_fast(classify(11, 22, 11));
    CHECK(!v8.complete);
    CHECK(v8.decided_by == DecisionPath::DegeneratePQ0);

    // p <= 3 delegates to the scan
    const CompletenessVerdict v9 = is_complete_fast(classify(1, 2, 3));
    CHECK(v9.decided_by == DecisionPath::Scan);
}

TEST_CASE("fast equals scan over a full small grid") {
    for (uint64_t p : oracle::primes_up_to(41)) {
        if (p < 5) continue;
        for (uint64_t P = 1; P < p; ++P) {
            for (uint64_t Q = 1; Q < p; ++Q) {
                const SeqParams sp = classify_unchecked(static_cast<int64_t>(P),
                                                        static_cast<int64_t>(Q), p);
                const CompletenessVerdict fast = is_complete_fast(sp);
                const CompletenessVerdict scan = is_complete_scan(sp);
                CHECK(fast.complete == scan.complete);
                if (fast.complete) CHECK(sp.kind != SeqCase::I);
            }
        }
    }
}

TEST_CASE("theorem Q=1: complete iff P = +-2, exhaustively to 61") {
    for (uint64_t p : oracle::primes_up_to(61)) {
        if (p < 5) continue;
        for (uint64_t P = 0; P < p; ++P) {
            const bool expected = P == 2 || P == p - 2;
            CHECK(is_complete_scan(classify_unchecked(static_cast<int64_t>(P), 1, p)).complete ==
                  expected);
        }
    }
}

TEST_CASE("[P,1] never completes past |P|+3") {
    for (int64_t P : {1, 3, 4, 5}) {
        for (uint64_t p : oracle::primes_up_to(1000)) {
            if (p <= static_cast<uint64_t>(P + 3) || p < 5) continue;
            CHECK(!is_complete_fast(classify(P, 1, p)).complete);
        }
    }
}

TEST_CASE("[P,-1] never completes for 7 < p <= 500 with p not dividing P^2+4") {
    // p | P^2+4 is the repeated-root case and IS complete ([3,-1] mod 13),
    // hence the hypothesis on Somer's theorem.
    for (int64_t P : {1, 2, 3}) {
        for (uint64_t p : oracle::primes_up_to(500)) {
            if (p <= 7 || static_cast<uint64_t>(P * P + 4) % p == 0) continue;
            CHECK(!is_complete_fast(classify(P, -1, p)).complete);
        }
    }
    CHECK(is_complete_fast(classify(3, -1, 13)).complete);  // the excluded prime
}

TEST_CASE("uniform multiplicity on the worked examples") {
    const Uniform1Report r13 = verify_uniform1(classify(1, 4, 13));
    CHECK(r13.all_ok());
    CHECK(r13.branch == 'a');  // p = 1 mod 4
    CHECK(r13.zero_count == 12);
    CHECK(r13.nonzero_count == 6);  // rho - 1

    const Uniform1Report r19 = verify_uniform1(classify(12, 5, 19));
    CHECK(r19.all_ok());
    CHECK(r19.branch == 'b');
    CHECK(r19.sub_branch == 2);  // (p-1)/2 zeros, (rho-1)/2 each
    CHECK(r19.zero_count == 9);
    CHECK(r19.nonzero_count == 2);

    const Uniform1Report r7 = verify_uniform1(classify(1, 4, 7));
    CHECK(r7.all_ok());
    CHECK(r7.branch == 'a');  // p = 3 mod 4 but rho = 4 even
    CHECK(r7.nonzero_count == 3);

    CHECK_THROWS_AS(verify_uniform1(classify(3, 2, 7)), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniform1(classify(1, 3, 13)), std::invalid_argument);  // ord too small
}

TEST_CASE("uniform multiplicity on random qualifying parameters") {
    std::mt19937_64 rng(20240809);
    const auto primes = oracle::primes_up_to(300);
    int checked = 0;
    while (checked < 25) {
        const uint64_t p = primes[3 + rng() % (primes.size() - 3)];
        const SeqParams sp = classify(static_cast<int64_t>(1 + rng() % (p - 1)),
                                      static_cast<int64_t>(1 + rng() % (p - 1)), p);
        if (sp.kind != SeqCase::III || sp.p_hat.is_zero()) continue;
        const uint64_t t = order_mod(sp.q_hat, factorize(p - 1));
        if (t != p - 1 && 2 * t != p - 1) continue;
        ++checked;
        CHECK(verify_uniform1(sp).all_ok());
    }
}

TEST_CASE("sum of squares identity for Q = 1") {
    const SumSquaresReport r = sum_of_squares_check(classify(3, 1, 7));
    CHECK(r.ok);
    CHECK(r.sum == 4);  // 1 + 9 + 1 mod 7 = -(5)^{-1} mod 7

    // alpha^r = +1 branch rejected: (1,1,11) has alpha^6 = 1
    CHECK_THROWS_AS(sum_of_squares_check(classify(1, 1, 11)), std::invalid_argument);
    // (1,1,7) is case I (delta = -3 = 4 mod 7, a residue): precondition fails
    CHECK_THROWS_AS(sum_of_squares_check(classify(1, 1, 7)), std::invalid_argument);
    CHECK_THROWS_AS(sum_of_squares_check(classify(1, 4, 7)), std::invalid_argument);  // Q != 1

    // every case-III Q=1 pair with alpha^r = -1 satisfies the identity
    std::mt19937_64 rng(5150);
    const auto primes = oracle::primes_up_to(400);
    int checked = 0;
    while (checked < 30) {
        const uint64_t p = primes[3 + rng() % (primes.size() - 3)];
        const int64_t P = static_cast<int64_t>(1 + rng() % (p - 1));
        const SeqParams sp = classify(P, 1, p);
        if (sp.kind != SeqCase::III) continue;
        try {
            const SumSquaresReport rep = sum_of_squares_check(sp);
            CHECK(rep.ok);
            ++checked;
        } catch (const std::invalid_argument&) {
            // alpha^r = +1 branch; identity not applicable
        }
    }
}
