#pragma once

// The generalized Fibonacci sequence [P,Q]: F_0 = 0, F_1 = 1,
// F_{n+1} = P F_n - Q F_{n-1}, reduced modulo an odd prime p.
// Terms come three ways: linear iteration, log-time companion-matrix
// powering, and Binet's formula evaluated in Z_p or K_p as a cross-check.

#include <cstdint>
#include <vector>

#include "gfib/arith.hpp"

namespace gfib {

// Case of the discriminant delta = P^2 - 4Q mod p:
//   I   nonzero quadratic residue (two roots in Z_p)
//   II  zero (repeated root P/2)
//   III nonresidue (roots in K_p)
//   DegenerateQ0 takes precedence when p | Q: F_n = P^(n-1) for n >= 1.
enum class SeqCase { I, II, III, DegenerateQ0 };

struct SeqParams {
    int64_t P = 0;
    int64_t Q = 0;
    uint64_t p = 0;
    FpElem p_hat, q_hat, delta_hat;
    SeqCase kind = SeqCase::I;
};

// Reduces (P, Q) mod p and classifies the discriminant. Rejects p that is
// not an odd prime or exceeds the 2^31 modulus limit.
SeqParams classify(int64_t P, int64_t Q, uint64_t p);

// Same, for callers that already validated p as an odd prime (census loops).
SeqParams classify_unchecked(int64_t P, int64_t Q, uint64_t p);

struct TermPair {
    uint64_t n = 0;
    FpElem f_n;   // F_n
    FpElem f_n1;  // F_{n+1}
};

// F_1, ..., F_count by the two-term recurrence.
std::vector<FpElem> iterate_terms(const SeqParams& sp, uint64_t count);

// Streaming form: fn(uint64_t value) is called for F_1, ..., F_count.
template <class Fn>
void for_each_term(const SeqParams& sp, uint64_t count, Fn&& fn) {
    const uint64_t p = sp.p;
    const uint64_t P = sp.p_hat.value();
    const uint64_t neg_q = (p - sp.q_hat.value()) % p;
    uint64_t fa = 1 % p;  // F_1
    uint64_t fb = P;      // F_2
    for (uint64_t n = 1; n <= count; ++n) {
        fn(fa);
        const uint64_t fc = (P * fb + neg_q * fa) % p;
        fa = fb;
        fb = fc;
    }
}

// (F_n, F_{n+1}) in O(log n) multiplications via powers of [[P, -Q], [1, 0]].
TermPair nth_term(const SeqParams& sp, uint64_t n);

// Binet evaluation (alpha^n - beta^n)/(alpha - beta) in Z_p (case I) or K_p
// (case III); the sqrt(delta) component divides out exactly. Rejects case II
// and DegenerateQ0.
FpElem binet_eval(const SeqParams& sp, uint64_t n);

// Case II closed form n * (P/2)^(n-1). Rejects cases I/III and P = 0 mod p.
FpElem repeated_root_term(const SeqParams& sp, uint64_t n);

// The roots (P +- sqrt(delta))/2 of x^2 - Px + Q as K_p elements (case III).
std::pair<Fp2Elem, Fp2Elem> characteristic_roots(const SeqParams& sp);

}  // namespace gfib
