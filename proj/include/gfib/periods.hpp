#pragma once

// Rank of apparition rho(p), Pisano period pi(p), the residue histogram of
// the full period {F_1, ..., F_pi}, and the (pi/rho) x rho period matrix with
// its rank-1 factorization entry(i,j) = u^(i-1) * entry(1,j), u = F_{rho+1}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gfib/sequence.hpp"

namespace gfib {

// Residue -> count map over the full period. Dense array below 2^22, hash map
// above (census scale keeps the hot case cache-resident).
class Histogram {
public:
    static constexpr uint64_t kDenseLimit = uint64_t{1} << 22;

    explicit Histogram(uint64_t p) : p_(p) {
        if (p < kDenseLimit) dense_.assign(p, 0);
    }

    void add(uint64_t r) {
        if (!dense_.empty()) {
            ++dense_[r];
        } else {
            ++sparse_[r];
        }
        ++total_;
    }

    uint64_t count(uint64_t r) const {
        if (!dense_.empty()) return dense_[r];
        auto it = sparse_.find(r);
        return it == sparse_.end() ? 0 : it->second;
    }

    uint64_t total() const { return total_; }
    uint64_t modulus() const { return p_; }

    // Visits (residue, count) for residues with nonzero count, ascending for
    // the dense representation.
    template <class Fn>
    void for_each(Fn&& fn) const {
        if (!dense_.empty()) {
            for (uint64_t r = 0; r < dense_.size(); ++r) {
                if (dense_[r] != 0) fn(r, dense_[r]);
            }
        } else {
            for (const auto& [r, c] : sparse_) fn(r, c);
        }
    }

    uint64_t distinct_residues() const;

private:
    uint64_t p_;
    std::vector<uint64_t> dense_;
    std::unordered_map<uint64_t, uint64_t> sparse_;
    uint64_t total_ = 0;
};

struct PeriodProfile {
    uint64_t rho = 0;    // rank of apparition
    uint64_t pi = 0;     // Pisano period
    uint64_t ord_q = 0;  // ord_p(Q)
    FpElem u;            // F_{rho+1} = alpha^rho
    std::optional<Histogram> histogram;
};

// Least n >= 1 with F_n = 0: the least divisor of p-1 (case I) or p+1
// (case III) at which the fast term vanishes; p itself in case II.
// Rejects DegenerateQ0 (no zero term beyond F_0 when P != 0).
uint64_t rank_of_apparition(const SeqParams& sp);

// rho, then u = F_{rho+1}, then pi = rho * ord_p(u); histogram filled by one
// streaming pass over pi terms when requested. Verifies (F_pi, F_{pi+1}) = (0,1).
PeriodProfile pisano_period(const SeqParams& sp, bool with_histogram = true);

struct MatrixCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PeriodMatrix {
    uint64_t rows = 0;  // pi / rho
    uint64_t cols = 0;  // rho
    uint64_t p = 0;
    std::vector<uint64_t> entries;  // row-major, entries[(i-1)*cols + (j-1)] = F_{(i-1)rho+j}

    uint64_t at(uint64_t i, uint64_t j) const { return entries[(i - 1) * cols + (j - 1)]; }
};

inline constexpr uint64_t kMatrixEntryCap = uint64_t{1} << 26;

// Materializes the full period row-major and validates the rank-1 structure.
// Throws MatrixCapExceeded when pi > max_entries.
PeriodMatrix period_matrix(const SeqParams& sp, uint64_t max_entries = kMatrixEntryCap);

struct Lemma1Report {
    bool alpha_ok = false;           // alpha^(p+1) = Q in K_p
    bool beta_ok = false;            // beta^(p+1) = Q in K_p
    bool divides_ok = false;         // pi | (p+1) ord_p(Q)
    bool odd_quotient_applicable = false;  // ord_p(Q) even
    bool odd_quotient_ok = true;     // (p+1) ord_p(Q) / pi odd (when applicable)
    uint64_t pi = 0;
    uint64_t ord_q = 0;
    uint64_t quotient = 0;

    bool all_ok() const { return alpha_ok && beta_ok && divides_ok && odd_quotient_ok; }
};

// Case III only.
Lemma1Report verify_lemma1(const SeqParams& sp);

}  // namespace gfib
