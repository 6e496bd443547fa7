#include <algorithm>
#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "gfib/witness.hpp"
#include "oracles.hpp"

using namespace gfib;

TEST_CASE("dichotomy classification") {
    CHECK(classify_dichotomy(1, -1) == DichotomyClass::QPm1);
    CHECK(classify_dichotomy(4, 1) == DichotomyClass::QPm1);
    CHECK(classify_dichotomy(1, 4) == DichotomyClass::QSquareM);
    CHECK(classify_dichotomy(1, 3) == DichotomyClass::QNonsquare);
    CHECK(classify_dichotomy(3, 2) == DichotomyClass::DeltaSquare);  // 9 - 8 = 1
    CHECK(classify_dichotomy(0, -2) == DichotomyClass::PZero);
    CHECK(classify_dichotomy(3, 0) == DichotomyClass::QZero);
    CHECK(classify_dichotomy(2, 1) == DichotomyClass::DeltaZero);
    CHECK(dichotomy_class_name(DichotomyClass::QSquareM) == "Q_square_m");
}

TEST_CASE("scan_primes on the paper families") {
    const WitnessScan fib = scan_primes(1, -1, 11, 1000);
    CHECK(fib.hits.empty());  // Fibonacci misses a class for every p > 7
    CHECK(fib.dichotomy == DichotomyClass::QPm1);
    CHECK(fib.primes_scanned > 0);

    const WitnessScan q1 = scan_primes(4, 1, 11, 1000);
    CHECK(q1.hits.empty());  // P -+ 2 = {2,6}: no prime factor above 7

    const WitnessScan sq = scan_primes(1, 4, 5, 100);
    CHECK(!sq.hits.empty());
    CHECK(std::count(sq.hits.begin(), sq.hits.end(), 7) == 1);
    CHECK(std::count(sq.hits.begin(), sq.hits.end(), 13) == 1);

    CHECK_THROWS_AS(scan_primes(1, 4, 3, 100), std::invalid_argument);
}

TEST_CASE("scan_primes hits re-verify and partition across jobs") {
    const WitnessScan a = scan_primes(2, 4, 5, 400, 1);
    const WitnessScan b = scan_primes(2, 4, 5, 400, 3);
    CHECK(a.hits == b.hits);
    CHECK(a.decided_by_tally == b.decided_by_tally);
    for (uint64_t p : a.hits) {
        CHECK(is_complete_scan(classify(2, 4, p)).complete);
    }
}

TEST_CASE("axis scans reduce to primitive root tests") {
    // P = 0, Q = -2: hits are exactly the primes with 2 a primitive root
    const WitnessScan s = scan_primes(0, -2, 5, 500);
    std::vector<uint64_t> expected;
    for (uint64_t p : oracle::primes_up_to(500)) {
        if (p < 5) continue;
        if (is_primitive_root(FpElem(2, p))) expected.push_back(p);
    }
    CHECK(s.hits == expected);

    // Q = 0, P = 3: primes where 3 is a primitive root
    const WitnessScan s2 = scan_primes(3, 0, 5, 300);
    std::vector<uint64_t> expected2;
    for (uint64_t p : oracle::primes_up_to(300)) {
        if (p < 5) continue;
        if (is_primitive_root(FpElem(3, p))) expected2.push_back(p);
    }
    CHECK(s2.hits == expected2);
}

TEST_CASE("build_progression on (1,4): T = 101 mod 120") {
    // independent re-derivation by brute force over residues 0..119
    std::vector<uint64_t> brute;
    for (uint64_t T = 0; T < 120; ++T) {
        if (T % 8 == 5 && T % 3 == 2 && T % 5 == 1) brute.push_back(T);
    }
    REQUIRE(brute == std::vector<uint64_t>{101});

    const ProgressionSpec spec = build_progression(1, 4);
    CHECK(spec.m == 2);
    CHECK(spec.sign == -1);
    CHECK(spec.X == 1);
    CHECK(spec.kernel == std::vector<uint64_t>{3, 5});
    CHECK(spec.t1 == 2);  // least nonresidue mod 3
    CHECK(spec.T == 101);
    CHECK(spec.modulus == 120);
    CHECK(!spec.lemma5);
    CHECK(legendre(-15, 101) == -1);
}

TEST_CASE("build_progression on (2,4): T = 5 mod 24") {
    const ProgressionSpec spec = build_progression(2, 4);  // delta = -12 = -(2^2)*3
    CHECK(spec.m == 2);
    CHECK(spec.X == 2);
    CHECK(spec.kernel == std::vector<uint64_t>{3});
    CHECK(spec.T == 5);
    CHECK(spec.modulus == 24);
    // first primes = 5 mod 24 make delta a nonresidue
    for (uint64_t p : {5ull, 29ull, 53ull, 101ull, 149ull, 173ull, 197ull}) {
        CHECK(legendre(-12, p) == -1);
    }
}

TEST_CASE("build_progression on (6,25): lemma-5 progression 4k+3") {
    const ProgressionSpec spec = build_progression(6, 25);  // delta = -64 = -(8^2)
    CHECK(spec.lemma5);
    CHECK(spec.m == 5);
    CHECK(spec.X == 8);
    CHECK(spec.kernel.empty());
    CHECK(spec.T == 3);
    CHECK(spec.modulus == 4);
}

TEST_CASE("build_progression rejections") {
    CHECK_THROWS_AS(build_progression(1, 3), std::invalid_argument);    // Q not a square
    CHECK_THROWS_AS(build_progression(1, 1), std::invalid_argument);    // m = 1
    CHECK_THROWS_AS(build_progression(4, 4), std::invalid_argument);    // delta = 0
    CHECK_THROWS_AS(build_progression(10, 9), std::invalid_argument);   // delta = 64 = +8^2
}

TEST_CASE("scan_progression returns verified complete primes") {
    const ProgressionSpec spec = build_progression(1, 4);
    const ProgressionScanResult r = scan_progression(spec, 2, 5);
    REQUIRE(r.primes.size() == 5);
    CHECK(!r.budget_exhausted);
    CHECK(r.primes == std::vector<uint64_t>{101, 461, 701, 821, 941});
    for (uint64_t p : r.primes) {
        CHECK(p % spec.modulus == spec.T);
        CHECK(legendre(-15, p) == -1);
        CHECK(order_mod(FpElem(4, p), factorize(p - 1)) == (p - 1) / 2);
        CHECK(is_complete_scan(classify(1, 4, p)).complete);
    }
}

TEST_CASE("scan_progression on the lemma-5 spec") {
    const ProgressionSpec spec = build_progression(6, 25);
    const ProgressionScanResult r = scan_progression(spec, 5, 3);
    REQUIRE(r.primes.size() == 3);
    CHECK(r.primes == std::vector<uint64_t>{11, 19, 59});
    for (uint64_t p : r.primes) {
        CHECK(p % 4 == 3);
        CHECK(is_primitive_root(FpElem(-5, p)));
        CHECK(is_complete_scan(classify(6, 25, p)).complete);
    }
}

TEST_CASE("scan_progression respects the candidate budget") {
    const ProgressionSpec spec = build_progression(1, 4);
    const ProgressionScanResult r = scan_progression(spec, 2, 50, 20);
    CHECK(r.budget_exhausted);
    CHECK(r.candidates_tried == 20);
    CHECK(r.primes.size() < 50);
}

TEST_CASE("dichotomy battery: Q = +-1 hits past max(7,|P|+3) are exactly p | delta") {
    // p | delta is the repeated-root case and always completes; beyond those,
    // the Q = +-1 families stay incomplete for every prime up to 2000.
    for (int64_t P = 1; P <= 6; ++P) {
        for (int64_t Q : {1, -1}) {
            const int64_t delta = P * P - 4 * Q;
            const int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(delta)));
            if (delta >= 0 && root * root == delta) continue;  // perfect square excluded
            const uint64_t lo = std::max<uint64_t>(7, static_cast<uint64_t>(P) + 3) + 1;
            const WitnessScan s = scan_primes(P, Q, lo, 2000);
            std::vector<uint64_t> case2_primes;
            for (uint64_t p : oracle::primes_up_to(2000)) {
                if (p >= lo && static_cast<uint64_t>(delta > 0 ? delta : -delta) % p == 0) {
                    case2_primes.push_back(p);
                }
            }
            CHECK(s.hits == case2_primes);
        }
    }
}
