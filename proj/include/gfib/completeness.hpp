#pragma once

// Decides whether [P,Q] attains every residue class mod p. The fast path is a
// closed-form decision tree (case analysis of the discriminant, the Q = 1
// criterion P = +-2, the ord_p(Q) in {p-1, (p-1)/2} uniformity criterion);
// the full-period scan is both the fallback and the oracle every fast verdict
// is cross-validated against.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gfib/periods.hpp"

namespace gfib {

enum class DecisionPath : int {
    CaseI = 0,
    CaseII,
    TheoremQ1,
    Uniform1,
    SpecialP0,
    SpecialQ0,
    DegeneratePQ0,
    Scan,
};
inline constexpr size_t kDecisionPathCount = 8;

std::string_view decision_path_name(DecisionPath d);

struct CompletenessVerdict {
    bool complete = false;
    DecisionPath decided_by = DecisionPath::Scan;
    std::optional<PeriodProfile> profile;  // scan verdicts that closed the period
};

// Streams at most pi terms (hard-capped by (p+1)(p-1)) marking seen residues;
// terminates when the state pair returns to (F_1, F_2) or every residue has
// been seen. With want_profile, attaches rho/pi/u/ord_q when the scan closed
// the period without early exit (histogram intentionally not collected).
CompletenessVerdict is_complete_scan(const SeqParams& sp, bool want_profile = false);

// Closed-form criteria in priority order; falls through to the scan when none
// applies (and for p <= 3, where the Q = 1 criterion does not hold).
CompletenessVerdict is_complete_fast(const SeqParams& sp);
CompletenessVerdict is_complete_fast(const SeqParams& sp, const Factorization& p_minus_1);

// Multiplicity structure of the full period under the uniformity hypothesis
// (case III, p does not divide P, ord_p(Q) in {p-1, (p-1)/2}): zero appears
// pi/rho times in {p-1, (p-1)/2} and each nonzero residue a constant
// rho-1 or (rho-1)/2 times. Branch is classified after computing the
// histogram and checked admissible against p mod 4 and the parity of rho.
struct Uniform1Report {
    char branch = '?';   // 'a' or 'b'
    int sub_branch = 0;  // 0 for (a); 1 = b(i), 2 = b(ii)
    uint64_t zero_count = 0;
    uint64_t nonzero_count = 0;  // the constant multiplicity
    bool counts_ok = false;      // histogram matches the stated multiplicities
    bool admissible = false;     // branch allowed for (p mod 4, parity of rho)
    uint64_t rho = 0, pi = 0, ord_q = 0;

    bool all_ok() const { return counts_ok && admissible; }
};
Uniform1Report verify_uniform1(const SeqParams& sp);

// For Q = 1, case III, and alpha^((p+1)/2) = -1: checks the closed form
// sum_{i=1}^{r-1} F_i^2 = -1/delta with r = (p+1)/2. Rejects the
// alpha^r = +1 branch (there pi | r and the identity does not apply).
struct SumSquaresReport {
    uint64_t sum = 0;       // observed sum mod p
    uint64_t expected = 0;  // -delta^{-1} mod p
    bool ok = false;
};
SumSquaresReport sum_of_squares_check(const SeqParams& sp);

}  // namespace gfib
