#pragma once

// Fixed-prime pair census: scans all (P,Q) in {1,...,p-1}^2, counts the
// complete pairs Lambda_p, the primitive-root set A_p, the high-order set B_p,
// the per-Q nonresidue sets C_Q, the Aladov sets X and Y, and checks the
// bounds (p-3)|B_p|/2 <= |Lambda_p| <= (p^2-1)/2 and |X|,|Y| >= (p-3)/4.
// A bound violation is a reported finding, never an exception.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gfib/completeness.hpp"

namespace gfib {

enum class CensusMode { Fast, Oracle, Both };

std::string_view census_mode_name(CensusMode m);

struct CensusReport {
    uint64_t p = 0;
    uint64_t lambda_count = 0;  // |Lambda_p|
    uint64_t a_count = 0;       // |A_p| primitive roots
    uint64_t b_count = 0;       // |B_p| order p-1 or (p-1)/2
    uint64_t x_count = 0;       // |X|
    uint64_t y_count = 0;       // |Y|
    uint64_t phi_p_minus_1 = 0;
    std::vector<uint32_t> c_counts;  // c_counts[Q-1] = |C_Q| for Q in [1, p)
    std::array<uint64_t, kDecisionPathCount> decided_by_tally{};

    bool bound_lower_ok = false;  // (p-3)|B_p| <= 2|Lambda_p|
    bool bound_upper_ok = false;  // 2|Lambda_p| <= p^2 - 1
    bool aladov_ok = false;       // 4|X| >= p-3 and 4|Y| >= p-3
    bool a_phi_ok = false;        // |A_p| = phi(p-1)
    bool a_le_b_ok = false;       // |A_p| <= |B_p|
    bool b_ge_2a_applicable = false;  // p = 3 mod 4
    bool b_ge_2a_ok = true;           // |B_p| >= 2|A_p| when applicable

    uint64_t ratio_num() const { return lambda_count; }
    uint64_t ratio_den() const { return p * p; }
    double ratio() const { return static_cast<double>(lambda_count) / static_cast<double>(p * p); }
    std::string ratio_string() const;

    bool any_bound_violation() const {
        return !(bound_lower_ok && bound_upper_ok && aladov_ok && a_phi_ok && a_le_b_ok && b_ge_2a_ok);
    }
};

// Scans all (p-1)^2 pairs, partitioned by P-row across `jobs` workers.
// Mode Both runs the fast path and the oracle per pair and throws
// std::runtime_error on any disagreement. Rejects p < 5 or composite.
CensusReport census(uint64_t p, CensusMode mode, unsigned jobs = 1);

// X = { x : x residue, x-1 nonresidue }, Y = { y : y-1 residue, y nonresidue }.
std::pair<std::vector<uint64_t>, std::vector<uint64_t>> aladov_sets(uint64_t p);

struct CQReport {
    uint64_t p = 0;
    uint64_t q = 0;
    std::vector<uint64_t> members;  // P in [1, p) with P^2 - 4Q a nonresidue
    uint64_t count = 0;
    uint64_t twice_image = 0;       // 2|X| if Q residue, 2|Y| if nonresidue
    bool p0_would_join = false;     // -4Q nonresidue: P = 0 joins over [0, p)
    bool two_to_one_ok = false;     // count == twice_image
};

// |C_Q| with the two-to-one bookkeeping of P -> P^2/(4Q). Rejects Q = 0 mod p.
CQReport c_q_count(uint64_t p, uint64_t Q);

struct RatioRow {
    uint64_t p = 0;
    uint64_t lambda = 0;
    uint64_t den = 0;  // p^2
    double ratio = 0.0;
    bool safe_prime_like = false;  // p = 3 mod 4 with (p-1)/2 prime
    bool ok = false;
    std::string error;
};

// Census per prime with per-prime error isolation. Mode Both is demoted to
// Fast for p > 101 (the dual census is quadratic in p; the fast path is
// validated below that threshold).
std::vector<RatioRow> ratio_series(const std::vector<uint64_t>& primes, CensusMode mode,
                                   unsigned jobs = 1);

}  // namespace gfib
