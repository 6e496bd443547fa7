#pragma once

// Fixed (P,Q), varying prime: scans a prime range for moduli where [P,Q] is
// complete, classifies (P,Q) into the finite/infinite dichotomy, and builds
// the constructive arithmetic progression (squarefree kernel of the
// discriminant + CRT) whose primes with ord_p(-m) = p-1 are guaranteed
// complete when Q = m^2.

#include <array>
#include <cstdint>
#include <vector>

#include "gfib/completeness.hpp"

namespace gfib {

enum class DichotomyClass : int {
    QPm1 = 0,      // Q = +-1: finitely many complete primes
    QSquareM,      // Q = m^2, m > 1
    QNonsquare,    // Q not a perfect square, Q != +-1
    DeltaSquare,   // P^2 - 4Q a nonzero perfect square: never complete (p > 2)
    PZero,         // complete iff -Q is a primitive root
    QZero,         // complete iff P is a primitive root
    DeltaZero,     // repeated root: complete modulo every p not dividing P
};

std::string_view dichotomy_class_name(DichotomyClass c);
DichotomyClass classify_dichotomy(int64_t P, int64_t Q);

struct WitnessScan {
    int64_t P = 0;
    int64_t Q = 0;
    uint64_t lo = 0;
    uint64_t hi = 0;
    std::vector<uint64_t> hits;  // primes where [P,Q] is complete, ascending
    std::array<uint64_t, kDecisionPathCount> decided_by_tally{};
    DichotomyClass dichotomy = DichotomyClass::QNonsquare;
    uint64_t primes_scanned = 0;
};

// Decides completeness for every prime in [lo, hi] via the fast path
// (small primes dividing Q, P, or delta are handled by the classification).
// Every hit is re-verified against the full-period scan oracle when
// verify_hits is set; a mismatch throws std::logic_error.
WitnessScan scan_primes(int64_t P, int64_t Q, uint64_t lo, uint64_t hi,
                        unsigned jobs = 1, bool verify_hits = true);

struct ProgressionSpec {
    int64_t P = 0;
    int64_t Q = 0;
    int64_t m = 0;    // Q = m^2, m > 1
    int sign = 0;     // sign of delta
    uint64_t X = 0;   // square part: |delta| = X^2 * prod(kernel)
    std::vector<uint64_t> kernel;  // squarefree kernel primes, ascending
    uint64_t t1 = 0;  // least nonresidue mod kernel[0], or 5 when kernel[0] = 2
    uint64_t T = 0;
    uint64_t modulus = 0;  // 8 * prod(kernel); progression is {T + k*modulus}
    bool lemma5 = false;   // delta = -X^2: progression {4k+3} instead
};

// Requires Q = m^2 with m > 1. Nonempty kernel: solves T = 5 (mod 8),
// T = t1 (mod p1), T = 1 (mod p_i, i > 1). Empty kernel: delta = -X^2 yields
// the {4k+3} progression; delta = +X^2 is rejected (never complete).
ProgressionSpec build_progression(int64_t P, int64_t Q);

struct ProgressionScanResult {
    std::vector<uint64_t> primes;
    uint64_t candidates_tried = 0;
    bool budget_exhausted = false;
};

// Walks the progression keeping primes with ord_p(-m) = p-1 (hence
// ord_p(Q) = (p-1)/2), verifies legendre(delta, p) = -1 and p > P, and
// confirms completeness. Exhausting the candidate budget before `count`
// hits is a reported finding, not an error.
ProgressionScanResult scan_progression(const ProgressionSpec& spec, int64_t m, size_t count,
                                       uint64_t budget = 1'000'000);

}  // namespace gfib
