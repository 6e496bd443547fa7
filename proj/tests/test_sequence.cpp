#include <random>

#include <stdexcept>

#include "doctest.h"
#include "gfib/sequence.hpp"
#include "oracles.hpp"

using namespace gfib;

namespace {

std::vector<uint64_t> values(const std::vector<FpElem>& terms) {
    std::vector<uint64_t> v;
    v.reserve(terms.size());
    for (const auto& t : terms) v.push_back(t.value());
    return v;
}

// deterministic random parameter sets with p prime
struct ParamGen {
    std::mt19937_64 rng;
    std::vector<uint64_t> primes;
    explicit ParamGen(uint64_t seed, uint64_t max_p = 1000) : rng(seed) {
        for (uint64_t p : oracle::primes_up_to(max_p)) {
            if (p >= 5) primes.push_back(p);
        }
    }
    SeqParams next() {
        const uint64_t p = primes[rng() % primes.size()];
        const int64_t P = static_cast<int64_t>(rng() % (2 * p)) - static_cast<int64_t>(p);
        const int64_t Q = static_cast<int64_t>(rng() % (2 * p)) - static_cast<int64_t>(p);
        return classify(P, Q, p);
    }
};

}  // namespace

TEST_CASE("classify assigns discriminant cases") {
    CHECK(classify(1, 4, 7).kind == SeqCase::III);   // delta = -15 = 6 mod 7, nonresidue
    CHECK(classify(2, 1, 11).kind == SeqCase::II);   // delta = 0 identically
    CHECK(classify(3, 2, 7).kind == SeqCase::I);     // delta = 1
    CHECK(classify(3, 0, 7).kind == SeqCase::DegenerateQ0);
    CHECK(classify(3, 14, 7).kind == SeqCase::DegenerateQ0);  // p | Q
    CHECK(classify(1, 4, 7).delta_hat.value() == 6);
    CHECK(classify(-6, 4, 7).p_hat.value() == 1);  // signed reduction

    CHECK_THROWS_AS(classify(1, 1, 9), std::invalid_argument);
    CHECK_THROWS_AS(classify(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify(1, 1, 4294967291ull), std::invalid_argument);  // >= 2^31
}

TEST_CASE("iterate_terms reproduces known listings") {
    // full period of [1,4] mod 7
    CHECK(values(iterate_terms(classify(1, 4, 7), 24)) ==
          std::vector<uint64_t>{1, 1, 4, 0, 5, 5, 6, 0, 4, 4, 2, 0,
                                6, 6, 3, 0, 2, 2, 1, 0, 3, 3, 5, 0});
    // classical Fibonacci mod 7
    CHECK(values(iterate_terms(classify(1, -1, 7), 16)) ==
          std::vector<uint64_t>{1, 1, 2, 3, 5, 1, 6, 0, 6, 6, 5, 4, 2, 6, 1, 0});
    // F_1 = 1, F_2 = P
    const auto two = values(iterate_terms(classify(9, 2, 11), 2));
    CHECK(two == std::vector<uint64_t>{1, 9});
}

TEST_CASE("recurrence invariant holds along the stream") {
    ParamGen gen(2024);
    for (int s = 0; s < 20; ++s) {
        const SeqParams sp = gen.next();
        const auto terms = iterate_terms(sp, 10000);
        for (size_t i = 2; i < terms.size(); ++i) {
            CHECK(terms[i] == sp.p_hat * terms[i - 1] - sp.q_hat * terms[i - 2]);
        }
    }
}

TEST_CASE("nth_term agrees with iteration") {
    const SeqParams ex1 = classify(1, 4, 7);
    CHECK(nth_term(ex1, 0).f_n.value() == 0);
    CHECK(nth_term(ex1, 0).f_n1.value() == 1);
    CHECK(nth_term(ex1, 5).f_n.value() == 5);
    CHECK(nth_term(ex1, 5).f_n1.value() == 5);
    CHECK(nth_term(classify(12, 5, 19), 6).f_n.value() == 16);  // u = alpha^5 = F_6

    ParamGen gen(99);
    for (int s = 0; s < 100; ++s) {
        const SeqParams sp = gen.next();
        const auto terms = iterate_terms(sp, 5001);
        std::mt19937_64 idx(1000 + s);
        for (int k = 0; k < 50; ++k) {
            const uint64_t n = 1 + idx() % 5000;
            const TermPair tp = nth_term(sp, n);
            CHECK(tp.f_n.value() == terms[n - 1].value());
            CHECK(tp.f_n1.value() == terms[n].value());
        }
    }
}

TEST_CASE("binet agrees with nth_term in cases I and III") {
    const SeqParams ex1 = classify(1, 4, 7);
    CHECK(binet_eval(ex1, 1).value() == 1);
    CHECK(binet_eval(ex1, 3).value() == 4);
    CHECK(binet_eval(classify(1, 4, 13), 7).value() == 0);  // rho(13) = 7

    ParamGen gen(7177);
    int checked = 0;
    while (checked < 40) {
        const SeqParams sp = gen.next();
        if (sp.kind != SeqCase::I && sp.kind != SeqCase::III) continue;
        ++checked;
        std::mt19937_64 idx(checked);
        for (int k = 0; k < 25; ++k) {
            const uint64_t n = idx() % 3000;
            CHECK(binet_eval(sp, n) == nth_term(sp, n).f_n);
        }
    }
    CHECK_THROWS_AS(binet_eval(classify(2, 1, 11), 3), std::invalid_argument);
    CHECK_THROWS_AS(binet_eval(classify(3, 0, 7), 3), std::invalid_argument);
}

TEST_CASE("generalized identity F_n = F_a F_{n+1-a} - Q F_{a-1} F_{n-a}") {
    ParamGen gen(31337);
    for (int s = 0; s < 10; ++s) {
        const SeqParams sp = gen.next();
        // F_0..F_200
        std::vector<FpElem> f;
        f.emplace_back(0, sp.p);
        for (const auto& t : iterate_terms(sp, 200)) f.push_back(t);
        for (uint64_t n = 1; n <= 200; ++n) {
            for (uint64_t a = 1; a <= n; ++a) {
                const FpElem rhs = f[a] * f[n + 1 - a] - sp.q_hat * f[a - 1] * f[n - a];
                CHECK(f[n] == rhs);
            }
        }
    }
}

TEST_CASE("repeated_root_term on case II") {
    const SeqParams sp = classify(2, 1, 11);
    CHECK(repeated_root_term(sp, 1).value() == 1);
    CHECK(repeated_root_term(sp, 11).value() == 0);  // p | n
    CHECK(repeated_root_term(sp, 21).value() == 10);  // n = (p-1)k+1, k=2: -k+1 mod 11

    for (uint64_t n = 1; n <= 5000; ++n) {
        CHECK(repeated_root_term(sp, n) == nth_term(sp, n).f_n);
    }
    // another repeated-root pair: P = 6, Q = 9 -> delta = 0
    const SeqParams sp2 = classify(6, 9, 13);
    REQUIRE(sp2.kind == SeqCase::II);
    for (uint64_t n = 1; n <= 2000; ++n) {
        CHECK(repeated_root_term(sp2, n) == nth_term(sp2, n).f_n);
    }

    CHECK_THROWS_AS(repeated_root_term(classify(1, 4, 7), 3), std::invalid_argument);
    CHECK_THROWS_AS(repeated_root_term(classify(11, 121, 11), 3), std::invalid_argument);  // p | Q: degenerate
}

TEST_CASE("degenerate Q = 0 gives the geometric sequence") {
    const SeqParams sp = classify(3, 0, 7);
    const auto terms = values(iterate_terms(sp, 8));
    // F_n = P^(n-1): 1, 3, 2, 6, 4, 5, 1, 3
    CHECK(terms == std::vector<uint64_t>{1, 3, 2, 6, 4, 5, 1, 3});
    CHECK(nth_term(sp, 6).f_n.value() == 5);
}
