#include "gfib/periods.hpp"

#include <string>

namespace gfib {

uint64_t Histogram::distinct_residues() const {
    if (!dense_.empty()) {
        uint64_t n = 0;
        for (uint64_t c : dense_) n += c != 0;
        return n;
    }
    return sparse_.size();
}

uint64_t rank_of_apparition(const SeqParams& sp) {
    switch (sp.kind) {
        case SeqCase::DegenerateQ0:
            throw std::invalid_argument("rank_of_apparition: undefined for p | Q");
        case SeqCase::II:
            return sp.p;  // F_n = n (P/2)^(n-1) vanishes iff p | n
        case SeqCase::I:
        case SeqCase::III:
            break;
    }
    // Zeros occur exactly at multiples of rho, and rho divides p -+ 1
    // (alpha^(p-1) = 1 in case I; alpha^(p+1) = Q = beta^(p+1) in case III),
    // so the least divisor with F_d = 0 is rho itself.
    const uint64_t bound = sp.kind == SeqCase::I ? sp.p - 1 : sp.p + 1;
    for (uint64_t d : factorize(bound).divisors()) {
        if (nth_term(sp, d).f_n.is_zero()) return d;
    }
    throw std::logic_error("rank_of_apparition: no zero found dividing p -+ 1");
}

PeriodProfile pisano_period(const SeqParams& sp, bool with_histogram) {
    PeriodProfile profile;
    profile.rho = rank_of_apparition(sp);
    const TermPair at_rho = nth_term(sp, profile.rho);
    if (!at_rho.f_n.is_zero()) throw std::logic_error("pisano_period: F_rho != 0");
    profile.u = at_rho.f_n1;

    const Factorization fac_pm1 = factorize(sp.p - 1);
    profile.pi = profile.rho * order_mod(profile.u, fac_pm1);
    profile.ord_q = order_mod(sp.q_hat, fac_pm1);

    const TermPair at_pi = nth_term(sp, profile.pi);
    if (!at_pi.f_n.is_zero() || at_pi.f_n1.value() != 1) {
        throw std::logic_error("pisano_period: (F_pi, F_pi+1) != (0, 1)");
    }

    if (with_histogram) {
        Histogram h(sp.p);
        for_each_term(sp, profile.pi, [&](uint64_t v) { h.add(v); });
        profile.histogram = std::move(h);
    }
    return profile;
}

PeriodMatrix period_matrix(const SeqParams& sp, uint64_t max_entries) {
    const PeriodProfile profile = pisano_period(sp, /*with_histogram=*/false);
    if (profile.pi > max_entries) {
        throw MatrixCapExceeded("period_matrix: pi = " + std::to_string(profile.pi) +
                                " exceeds entry cap " + std::to_string(max_entries));
    }
    PeriodMatrix m;
    m.rows = profile.pi / profile.rho;
    m.cols = profile.rho;
    m.p = sp.p;
    m.entries.reserve(profile.pi);
    for_each_term(sp, profile.pi, [&](uint64_t v) { m.entries.push_back(v); });

    // Rank-1 check: row i = u^(i-1) * row 1, last column zero.
    const uint64_t p = sp.p;
    uint64_t u_pow = 1 % p;
    for (uint64_t i = 1; i <= m.rows; ++i) {
        for (uint64_t j = 1; j <= m.cols; ++j) {
            const uint64_t expected = (u_pow * m.at(1, j)) % p;
            if (m.at(i, j) != expected) {
                throw std::logic_error("period_matrix: rank-1 factorization violated");
            }
        }
        if (m.at(i, m.cols) != 0) throw std::logic_error("period_matrix: last column not zero");
        u_pow = (u_pow * profile.u.value()) % p;
    }
    return m;
}

Lemma1Report verify_lemma1(const SeqParams& sp) {
    if (sp.kind != SeqCase::III) {
        throw std::invalid_argument("verify_lemma1: requires case III (delta a nonresidue)");
    }
    Lemma1Report report;
    auto [alpha, beta] = characteristic_roots(sp);
    const Fp2Elem q_embedded(sp.q_hat, FpElem(0, sp.p), sp.delta_hat);
    report.alpha_ok = fp2_pow(alpha, sp.p + 1) == q_embedded;
    report.beta_ok = fp2_pow(beta, sp.p + 1) == q_embedded;

    const PeriodProfile profile = pisano_period(sp, /*with_histogram=*/false);
    report.pi = profile.pi;
    report.ord_q = profile.ord_q;
    const uint64_t bound = (sp.p + 1) * profile.ord_q;
    report.divides_ok = bound % profile.pi == 0;
    if (report.divides_ok) report.quotient = bound / profile.pi;
    report.odd_quotient_applicable = profile.ord_q % 2 == 0;
    if (report.odd_quotient_applicable) {
        report.odd_quotient_ok = report.divides_ok && report.quotient % 2 == 1;
    }
    return report;
}

}  // namespace gfib
