#include "gfib/sequence.hpp"

#include <stdexcept>
#include <string>

namespace gfib {

SeqParams classify(int64_t P, int64_t Q, uint64_t p) {
    if (p < 3 || p % 2 == 0 || p > kMaxModulus || !is_prime(p)) {
        throw std::invalid_argument("classify: p must be an odd prime < 2^31, got " + std::to_string(p));
    }
    return classify_unchecked(P, Q, p);
}

SeqParams classify_unchecked(int64_t P, int64_t Q, uint64_t p) {
    SeqParams sp;
    sp.P = P;
    sp.Q = Q;
    sp.p = p;
    sp.p_hat = FpElem(P, p);
    sp.q_hat = FpElem(Q, p);
    sp.delta_hat = sp.p_hat * sp.p_hat - FpElem(4, p) * sp.q_hat;
    if (sp.q_hat.is_zero()) {
        sp.kind = SeqCase::DegenerateQ0;
        return sp;
    }
    if (sp.delta_hat.is_zero()) {
        sp.kind = SeqCase::II;
    } else {
        sp.kind = legendre(static_cast<int64_t>(sp.delta_hat.value()), p) == 1 ? SeqCase::I : SeqCase::III;
    }
    return sp;
}

std::vector<FpElem> iterate_terms(const SeqParams& sp, uint64_t count) {
    if (count < 1) throw std::invalid_argument("iterate_terms: count must be >= 1");
    std::vector<FpElem> terms;
    terms.reserve(count);
    for_each_term(sp, count, [&](uint64_t v) { terms.emplace_back(static_cast<int64_t>(v), sp.p); });
    return terms;
}

TermPair nth_term(const SeqParams& sp, uint64_t n) {
    const uint64_t p = sp.p;
    if (n == 0) return {0, FpElem(0, p), FpElem(1, p)};
    // M = [[P, -Q], [1, 0]]; M^n column 0 is (F_{n+1}, F_n).
    const uint64_t P = sp.p_hat.value();
    const uint64_t neg_q = (p - sp.q_hat.value()) % p;
    uint64_t m[2][2] = {{P, neg_q}, {1 % p, 0}};
    uint64_t r[2][2] = {{1 % p, 0}, {0, 1 % p}};
    auto matmul = [p](const uint64_t a[2][2], const uint64_t b[2][2], uint64_t out[2][2]) {
        uint64_t t00 = (a[0][0] * b[0][0] + a[0][1] * b[1][0]) % p;
        uint64_t t01 = (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % p;
        uint64_t t10 = (a[1][0] * b[0][0] + a[1][1] * b[1][0]) % p;
        uint64_t t11 = (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % p;
        out[0][0] = t00;
        out[0][1] = t01;
        out[1][0] = t10;
        out[1][1] = t11;
    };
    uint64_t e = n;
    while (e > 0) {
        if (e & 1) matmul(r, m, r);
        matmul(m, m, m);
        e >>= 1;
    }
    TermPair tp;
    tp.n = n;
    tp.f_n = FpElem(static_cast<int64_t>(r[1][0]), p);
    tp.f_n1 = FpElem(static_cast<int64_t>(r[0][0]), p);
    return tp;
}

std::pair<Fp2Elem, Fp2Elem> characteristic_roots(const SeqParams& sp) {
    if (sp.kind != SeqCase::III) {
        throw std::invalid_argument("characteristic_roots: delta must be a nonresidue (case III)");
    }
    const uint64_t p = sp.p;
    const FpElem half = FpElem(2, p).inverse();
    Fp2Elem alpha(sp.p_hat * half, half, sp.delta_hat);
    Fp2Elem beta(sp.p_hat * half, -half, sp.delta_hat);
    return {alpha, beta};
}

FpElem binet_eval(const SeqParams& sp, uint64_t n) {
    const uint64_t p = sp.p;
    switch (sp.kind) {
        case SeqCase::I: {
            const FpElem s = *sqrt_mod(sp.delta_hat);  // nonzero residue
            const FpElem half = FpElem(2, p).inverse();
            const FpElem alpha = (sp.p_hat + s) * half;
            const FpElem beta = (sp.p_hat - s) * half;
            return (alpha.pow(n) - beta.pow(n)) * s.inverse();
        }
        case SeqCase::III: {
            auto [alpha, beta] = characteristic_roots(sp);
            const Fp2Elem num = fp2_pow(alpha, n) - fp2_pow(beta, n);
            const Fp2Elem quot = num * (alpha - beta).inverse();
            if (!quot.in_base_field()) {
                throw std::logic_error("binet_eval: sqrt(delta) component did not divide out");
            }
            return quot.a();
        }
        case SeqCase::II:
            throw std::invalid_argument("binet_eval: repeated root (case II), use repeated_root_term");
        case SeqCase::DegenerateQ0:
            throw std::invalid_argument("binet_eval: p | Q (degenerate geometric case)");
    }
    throw std::logic_error("binet_eval: unreachable");
}

FpElem repeated_root_term(const SeqParams& sp, uint64_t n) {
    if (sp.kind != SeqCase::II) {
        throw std::invalid_argument("repeated_root_term: requires case II (delta = 0)");
    }
    if (sp.p_hat.is_zero()) {
        throw std::invalid_argument("repeated_root_term: requires P != 0 mod p");
    }
    if (n < 1) throw std::invalid_argument("repeated_root_term: n must be >= 1");
    const uint64_t p = sp.p;
    const FpElem root = sp.p_hat * FpElem(2, p).inverse();
    return FpElem(static_cast<int64_t>(n % p), p) * root.pow(n - 1);
}

}  // namespace gfib
