#include "gfib/completeness.hpp"

#include <stdexcept>

namespace gfib {

std::string_view decision_path_name(DecisionPath d) {
    switch (d) {
        case DecisionPath::CaseI: return "CaseI";
        case DecisionPath::CaseII: return "CaseII";
        case DecisionPath::TheoremQ1: return "TheoremQ1";
        case DecisionPath::Uniform1: return "Uniform1";
        case DecisionPath::SpecialP0: return "SpecialP0";
        case DecisionPath::SpecialQ0: return "SpecialQ0";
        case DecisionPath::DegeneratePQ0: return "DegeneratePQ0";
        case DecisionPath::Scan: return "Scan";
    }
    return "?";
}

CompletenessVerdict is_complete_scan(const SeqParams& sp, bool want_profile) {
    const uint64_t p = sp.p;
    const uint64_t P = sp.p_hat.value();
    const uint64_t Q = sp.q_hat.value();

    thread_local std::vector<uint64_t> seen;
    seen.assign((p + 63) / 64, 0);
    uint64_t unseen = p;
    auto mark = [&](uint64_t r) {
        uint64_t& word = seen[r >> 6];
        const uint64_t bit = uint64_t{1} << (r & 63);
        if (!(word & bit)) {
            word |= bit;
            --unseen;
        }
    };

    mark(0);  // F_0
    if (P == 0 && Q == 0) {
        // F_n = 0 for all n >= 2; residues attained are {0, 1}.
        mark(1 % p);
        return {unseen == 0, DecisionPath::Scan, std::nullopt};
    }

    const uint64_t neg_q = (p - Q) % p;
    uint64_t fa = 1 % p;  // F_1
    uint64_t fb = P;      // F_2
    const uint64_t start_a = fa, start_b = fb;
    const uint64_t max_steps = (p + 1) * (p - 1) + 2;
    uint64_t k = 1;  // index of fa
    uint64_t first_zero = 0;
    uint64_t u_val = 0;
    bool early_exit = false;

    while (true) {
        mark(fa);
        if (fa == 0 && first_zero == 0) {
            first_zero = k;
            u_val = fb;
        }
        if (unseen == 0) {
            early_exit = true;
            break;
        }
        const uint64_t fc = (P * fb + neg_q * fa) % p;
        fa = fb;
        fb = fc;
        ++k;
        if (fa == start_a && fb == start_b) break;  // k - 1 = pi
        if (k > max_steps) throw std::logic_error("is_complete_scan: exceeded (p+1)(p-1) bound");
    }

    CompletenessVerdict verdict;
    verdict.complete = unseen == 0;
    verdict.decided_by = DecisionPath::Scan;
    if (want_profile && !early_exit && sp.kind != SeqCase::DegenerateQ0) {
        PeriodProfile profile;
        profile.pi = k - 1;
        profile.rho = first_zero;
        profile.u = FpElem(static_cast<int64_t>(u_val), p);
        profile.ord_q = order_mod(sp.q_hat, factorize(p - 1));
        verdict.profile = std::move(profile);
    }
    return verdict;
}

CompletenessVerdict is_complete_fast(const SeqParams& sp) {
    if (sp.p <= 3) return is_complete_scan(sp);
    return is_complete_fast(sp, factorize(sp.p - 1));
}

CompletenessVerdict is_complete_fast(const SeqParams& sp, const Factorization& p_minus_1) {
    const uint64_t p = sp.p;
    if (p <= 3) return is_complete_scan(sp);  // Theorem on Q=1 needs p > 3

    const bool p_zero = sp.p_hat.is_zero();
    const bool q_zero = sp.q_hat.is_zero();
    if (p_zero && q_zero) return {false, DecisionPath::DegeneratePQ0, std::nullopt};
    if (p_zero) {
        // F_{2k} = 0, F_{2k+1} = (-Q)^k
        return {is_primitive_root(-sp.q_hat, p_minus_1), DecisionPath::SpecialP0, std::nullopt};
    }
    if (q_zero) {
        // F_n = P^(n-1) for n >= 1
        return {is_primitive_root(sp.p_hat, p_minus_1), DecisionPath::SpecialQ0, std::nullopt};
    }

    switch (sp.kind) {
        case SeqCase::I:
            return {false, DecisionPath::CaseI, std::nullopt};  // pi | p-1
        case SeqCase::II:
            return {true, DecisionPath::CaseII, std::nullopt};  // P != 0 here
        case SeqCase::III:
        case SeqCase::DegenerateQ0:
            break;
    }

    if (sp.q_hat.value() == 1) {
        // [P,1] complete iff P = +-2 mod p; +-2 lands in case II, so here: no.
        const bool complete = sp.p_hat.value() == 2 || sp.p_hat.value() == p - 2;
        return {complete, DecisionPath::TheoremQ1, std::nullopt};
    }

    const uint64_t t = order_mod(sp.q_hat, p_minus_1);
    if (t == p - 1 || 2 * t == p - 1) {
        return {true, DecisionPath::Uniform1, std::nullopt};
    }
    return is_complete_scan(sp);
}

Uniform1Report verify_uniform1(const SeqParams& sp) {
    const uint64_t p = sp.p;
    if (sp.kind != SeqCase::III || sp.p_hat.is_zero()) {
        throw std::invalid_argument("verify_uniform1: requires case III with p not dividing P");
    }
    const PeriodProfile profile = pisano_period(sp, /*with_histogram=*/true);
    if (profile.ord_q != p - 1 && 2 * profile.ord_q != p - 1) {
        throw std::invalid_argument("verify_uniform1: requires ord_p(Q) in {p-1, (p-1)/2}");
    }

    Uniform1Report report;
    report.rho = profile.rho;
    report.pi = profile.pi;
    report.ord_q = profile.ord_q;
    const Histogram& h = *profile.histogram;
    report.zero_count = h.count(0);

    // The nonzero counts must all equal one constant.
    uint64_t constant = 0;
    bool constant_ok = h.distinct_residues() == p;  // every residue must appear
    h.for_each([&](uint64_t r, uint64_t c) {
        if (r == 0) return;
        if (constant == 0) constant = c;
        if (c != constant) constant_ok = false;
    });
    report.nonzero_count = constant;

    const bool zeros_match = report.zero_count == profile.pi / profile.rho;
    const bool variant_full = report.zero_count == p - 1 && constant == profile.rho - 1;
    const bool variant_half =
        2 * report.zero_count == p - 1 && 2 * constant == profile.rho - 1;
    report.counts_ok = constant_ok && zeros_match && (variant_full || variant_half);

    if (p % 4 == 1 || profile.rho % 2 == 0) {
        report.branch = 'a';
        report.sub_branch = 0;
        report.admissible = variant_full;  // (a) forces the full multiplicities
    } else {
        report.branch = 'b';
        report.sub_branch = variant_full ? 1 : 2;
        report.admissible = variant_full || variant_half;
    }
    return report;
}

SumSquaresReport sum_of_squares_check(const SeqParams& sp) {
    const uint64_t p = sp.p;
    if (sp.q_hat.value() != 1 || sp.kind != SeqCase::III) {
        throw std::invalid_argument("sum_of_squares_check: requires Q = 1 and case III");
    }
    const uint64_t r = (p + 1) / 2;
    auto [alpha, beta] = characteristic_roots(sp);
    const Fp2Elem ar = fp2_pow(alpha, r);
    const Fp2Elem one = Fp2Elem::one(alpha.delta());
    if (ar == one) {
        throw std::invalid_argument("sum_of_squares_check: alpha^((p+1)/2) = +1, identity not applicable");
    }
    if (!(ar == -one)) {
        throw std::logic_error("sum_of_squares_check: alpha^((p+1)/2) is not +-1");
    }

    uint64_t sum = 0;
    for_each_term(sp, r - 1, [&](uint64_t v) { sum = (sum + v * v) % p; });

    SumSquaresReport report;
    report.sum = sum;
    report.expected = (-sp.delta_hat.inverse()).value();
    report.ok = report.sum == report.expected;
    return report;
}

}  // namespace gfib
