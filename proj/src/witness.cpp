#include "gfib/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace gfib {

namespace {

bool is_perfect_square(int64_t n, uint64_t* root = nullptr) {
    if (n < 0) return false;
    uint64_t r = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r > 0 && r * r > static_cast<uint64_t>(n)) --r;
    while ((r + 1) * (r + 1) <= static_cast<uint64_t>(n)) ++r;
    if (r * r != static_cast<uint64_t>(n)) return false;
    if (root) *root = r;
    return true;
}

// CRT for pairwise coprime moduli.
std::pair<uint64_t, uint64_t> crt_merge(std::pair<uint64_t, uint64_t> a,
                                        std::pair<uint64_t, uint64_t> b) {
    auto [r1, m1] = a;
    auto [r2, m2] = b;
    // x = r1 + m1 * k, need r1 + m1 k = r2 (mod m2)
    const uint64_t m1_inv = [&] {
        // extended euclid on (m1 mod m2, m2)
        int64_t t = 0, new_t = 1;
        int64_t r = static_cast<int64_t>(m2), new_r = static_cast<int64_t>(m1 % m2);
        while (new_r != 0) {
            const int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1) throw std::logic_error("crt_merge: moduli not coprime");
        return static_cast<uint64_t>((t % static_cast<int64_t>(m2) + static_cast<int64_t>(m2)) %
                                     static_cast<int64_t>(m2));
    }();
    const uint64_t diff = (r2 + m2 - r1 % m2) % m2;
    const uint64_t k = mul_mod(diff, m1_inv, m2);
    return {r1 + m1 * k, m1 * m2};
}

}  // namespace

std::string_view dichotomy_class_name(DichotomyClass c) {
    switch (c) {
        case DichotomyClass::QPm1: return "Q_pm1";
        case DichotomyClass::QSquareM: return "Q_square_m";
        case DichotomyClass::QNonsquare: return "Q_nonsquare";
        case DichotomyClass::DeltaSquare: return "delta_square";
        case DichotomyClass::PZero: return "P_zero";
        case DichotomyClass::QZero: return "Q_zero";
        case DichotomyClass::DeltaZero: return "delta_zero";
    }
    return "?";
}

DichotomyClass classify_dichotomy(int64_t P, int64_t Q) {
    if (P == 0) return DichotomyClass::PZero;
    if (Q == 0) return DichotomyClass::QZero;
    const int64_t delta = P * P - 4 * Q;
    if (delta == 0) return DichotomyClass::DeltaZero;
    if (is_perfect_square(delta)) return DichotomyClass::DeltaSquare;
    if (Q == 1 || Q == -1) return DichotomyClass::QPm1;
    if (Q > 1 && is_perfect_square(Q)) return DichotomyClass::QSquareM;
    return DichotomyClass::QNonsquare;
}

WitnessScan scan_primes(int64_t P, int64_t Q, uint64_t lo, uint64_t hi, unsigned jobs,
                        bool verify_hits) {
    if (lo < 5 || hi < lo) throw std::invalid_argument("scan_primes: need hi >= lo >= 5");
    if (jobs == 0) jobs = 1;

    WitnessScan scan;
    scan.P = P;
    scan.Q = Q;
    scan.lo = lo;
    scan.hi = hi;
    scan.dichotomy = classify_dichotomy(P, Q);

    struct Partial {
        std::vector<uint64_t> hits;
        std::array<uint64_t, kDecisionPathCount> tally{};
        uint64_t scanned = 0;
    };
    std::vector<Partial> partials(jobs);
    auto worker = [&](unsigned w) {
        Partial& part = partials[w];
        // odd candidates striped across workers
        for (uint64_t c = lo + w * 2; c <= hi; c += 2 * jobs) {
            for (uint64_t cand = c; cand < c + 2 && cand <= hi; ++cand) {
                if (cand % 2 == 0 || !is_prime(cand)) continue;
                ++part.scanned;
                const SeqParams sp = classify_unchecked(P, Q, cand);
                const CompletenessVerdict v = is_complete_fast(sp);
                ++part.tally[static_cast<size_t>(v.decided_by)];
                if (v.complete) {
                    if (verify_hits && !is_complete_scan(sp).complete) {
                        throw std::logic_error("scan_primes: fast hit failed oracle at p = " +
                                               std::to_string(cand));
                    }
                    part.hits.push_back(cand);
                }
            }
        }
    };
    if (jobs == 1) {
        // simple sequential walk over odd candidates
        Partial& part = partials[0];
        for (uint64_t cand = lo; cand <= hi; ++cand) {
            if (cand > 2 && cand % 2 == 0) continue;
            if (!is_prime(cand)) continue;
            ++part.scanned;
            const SeqParams sp = classify_unchecked(P, Q, cand);
            const CompletenessVerdict v = is_complete_fast(sp);
            ++part.tally[static_cast<size_t>(v.decided_by)];
            if (v.complete) {
                if (verify_hits && !is_complete_scan(sp).complete) {
                    throw std::logic_error("scan_primes: fast hit failed oracle at p = " +
                                           std::to_string(cand));
                }
                part.hits.push_back(cand);
            }
        }
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (Partial& part : partials) {
        scan.primes_scanned += part.scanned;
        for (size_t i = 0; i < kDecisionPathCount; ++i) scan.decided_by_tally[i] += part.tally[i];
        scan.hits.insert(scan.hits.end(), part.hits.begin(), part.hits.end());
    }
    std::sort(scan.hits.begin(), scan.hits.end());
    return scan;
}

ProgressionSpec build_progression(int64_t P, int64_t Q) {
    ProgressionSpec spec;
    spec.P = P;
    spec.Q = Q;
    uint64_t m = 0;
    if (Q <= 1 || !is_perfect_square(Q, &m) || m <= 1) {
        throw std::invalid_argument("build_progression: Q must be a perfect square m^2 with m > 1");
    }
    spec.m = static_cast<int64_t>(m);

    const int64_t delta = P * P - 4 * Q;
    if (delta == 0) {
        throw std::invalid_argument(
            "build_progression: delta = 0 (repeated root; complete modulo every prime not dividing P)");
    }
    spec.sign = delta > 0 ? 1 : -1;

    // |delta| = X^2 * kernel with kernel squarefree
    const Factorization fac = factorize(static_cast<uint64_t>(delta > 0 ? delta : -delta));
    spec.X = 1;
    for (const auto& [prime, exp] : fac.factors) {
        for (unsigned e = 0; e + 1 < exp; e += 2) spec.X *= prime;
        if (exp % 2 == 1) spec.kernel.push_back(prime);
    }

    if (spec.kernel.empty()) {
        if (spec.sign > 0) {
            throw std::invalid_argument(
                "build_progression: delta is a positive perfect square; [P,Q] is never complete");
        }
        // delta = -X^2: any p = 3 (mod 4) makes delta a nonresidue
        spec.lemma5 = true;
        spec.T = 3;
        spec.modulus = 4;
        return spec;
    }

    const uint64_t p1 = spec.kernel.front();
    if (p1 == 2) {
        spec.t1 = 5;
    } else {
        uint64_t t = 2;
        while (legendre(static_cast<int64_t>(t), p1) != -1) ++t;
        spec.t1 = t;
    }

    std::pair<uint64_t, uint64_t> sol{5, 8};
    for (size_t i = 0; i < spec.kernel.size(); ++i) {
        const uint64_t pi = spec.kernel[i];
        if (pi == 2) continue;  // T = 5 (mod 8) already fixes T mod 2
        sol = crt_merge(sol, {i == 0 ? spec.t1 : 1, pi});
    }
    spec.modulus = 8;
    for (uint64_t q : spec.kernel) {
        if (spec.modulus > UINT64_MAX / q) {
            throw std::invalid_argument("build_progression: progression modulus exceeds 64 bits");
        }
        spec.modulus *= q;
    }
    spec.T = sol.first % sol.second;

    // Invariants from the construction.
    if (std::gcd(spec.T, spec.modulus) != 1) {
        throw std::logic_error("build_progression: gcd(T, modulus) != 1");
    }
    if (spec.T % 8 != 5) throw std::logic_error("build_progression: T != 5 (mod 8)");
    for (size_t i = 0; i < spec.kernel.size(); ++i) {
        const uint64_t pi = spec.kernel[i];
        const uint64_t want = pi == 2 ? 1 : (i == 0 ? spec.t1 : 1);
        if (spec.T % pi != want % pi) throw std::logic_error("build_progression: CRT congruence violated");
    }
    return spec;
}

ProgressionScanResult scan_progression(const ProgressionSpec& spec, int64_t m, size_t count,
                                       uint64_t budget) {
    if (m <= 1) throw std::invalid_argument("scan_progression: m must be > 1");
    ProgressionScanResult result;
    const int64_t delta = spec.P * spec.P - 4 * spec.Q;
    uint64_t candidate = spec.lemma5 ? 3 : spec.T;
    const uint64_t step = spec.lemma5 ? 4 : spec.modulus;

    while (result.primes.size() < count && result.candidates_tried < budget) {
        ++result.candidates_tried;
        const uint64_t p = candidate;
        candidate += step;
        if (p < 5 || p > kMaxModulus || !is_prime(p)) continue;
        if (static_cast<int64_t>(p) <= spec.P) continue;  // theorem applies for p > P
        const FpElem minus_m(-m, p);
        if (minus_m.is_zero()) continue;  // p | m
        const Factorization fac_pm1 = factorize(p - 1);
        if (!is_primitive_root(minus_m, fac_pm1)) continue;
        if (legendre(delta, p) != -1) continue;  // only fails when p | X
        const SeqParams sp = classify_unchecked(spec.P, spec.Q, p);
        const CompletenessVerdict v = is_complete_fast(sp, fac_pm1);
        if (!v.complete) {
            throw std::logic_error("scan_progression: qualified prime unexpectedly incomplete: p = " +
                                   std::to_string(p));
        }
        result.primes.push_back(p);
    }
    result.budget_exhausted = result.primes.size() < count;
    return result;
}

}  // namespace gfib
