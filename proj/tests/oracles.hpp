#pragma once

// Brute-force reference implementations used to validate the library's fast
// paths. These deliberately avoid the library's own machinery: plain
// recurrence walks, residue set enumeration, and sieves.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// F_1, ..., F_count by the naive recurrence.
inline std::vector<uint64_t> sequence_mod(int64_t P, int64_t Q, uint64_t p, uint64_t count) {
    const uint64_t ph = static_cast<uint64_t>(((P % static_cast<int64_t>(p)) + static_cast<int64_t>(p))) % p;
    const uint64_t nq = (p - static_cast<uint64_t>(((Q % static_cast<int64_t>(p)) + static_cast<int64_t>(p))) % p) % p;
    std::vector<uint64_t> terms;
    terms.reserve(count);
    uint64_t fa = 1 % p, fb = ph;
    for (uint64_t n = 1; n <= count; ++n) {
        terms.push_back(fa);
        const uint64_t fc = (ph * fb + nq * fa) % p;
        fa = fb;
        fb = fc;
    }
    return terms;
}

// Attained-residue test by unconditionally walking p^2 + 2 terms from F_0
// (the sequence is eventually periodic with preperiod <= 1 and period
// dividing p^2 - 1, so every attained residue shows up in that window).
inline bool complete_mod(int64_t P, int64_t Q, uint64_t p) {
    std::vector<bool> seen(p, false);
    seen[0] = true;  // F_0
    uint64_t found = 1;
    for (uint64_t v : sequence_mod(P, Q, p, p * p + 2)) {
        if (!seen[v]) {
            seen[v] = true;
            if (++found == p) return true;
        }
    }
    return false;
}

// Least n with (F_n, F_n+1) = (0, 1) by a plain pair walk. Requires p not
// dividing Q (pure periodicity).
inline uint64_t pisano_mod(int64_t P, int64_t Q, uint64_t p) {
    const uint64_t ph = static_cast<uint64_t>(((P % static_cast<int64_t>(p)) + static_cast<int64_t>(p))) % p;
    const uint64_t nq = (p - static_cast<uint64_t>(((Q % static_cast<int64_t>(p)) + static_cast<int64_t>(p))) % p) % p;
    uint64_t fa = 0, fb = 1 % p;
    for (uint64_t n = 1;; ++n) {
        const uint64_t fc = (ph * fb + nq * fa) % p;
        fa = fb;
        fb = fc;
        if (fa == 0 && fb == 1 % p) return n;
    }
}

inline std::set<uint64_t> squares_mod(uint64_t p) {
    std::set<uint64_t> sq;
    for (uint64_t x = 1; x < p; ++x) sq.insert(x * x % p);
    return sq;
}

inline uint64_t naive_order(uint64_t x, uint64_t p) {
    uint64_t t = 1, y = x % p;
    while (y != 1) {
        y = y * x % p;
        ++t;
    }
    return t;
}

inline std::vector<uint64_t> primes_up_to(uint64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return primes;
}

// phi(0..n) by the standard sieve.
inline std::vector<uint64_t> totients_up_to(uint64_t n) {
    std::vector<uint64_t> phi(n + 1);
    for (uint64_t i = 0; i <= n; ++i) phi[i] = i;
    for (uint64_t i = 2; i <= n; ++i) {
        if (phi[i] != i) continue;  // composite already processed
        for (uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    }
    return phi;
}

}  // namespace oracle
