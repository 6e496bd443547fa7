#include "gfib/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gfib {

namespace {

// Large enough that p-1 and p+1 for p < 2^31 factor by trial division alone.
constexpr uint64_t kTrialBound = 1u << 16;

void check_odd_prime_modulus(uint64_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("modulus must be an odd prime >= 3, got " + std::to_string(p));
    }
    if (p > kMaxModulus) {
        throw std::invalid_argument("modulus exceeds 2^31 limit: " + std::to_string(p));
    }
}

}  // namespace

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set deterministic for all n < 2^64 (Sorenson & Webster).
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(int64_t a, uint64_t p) {
    if (p % 2 == 0 || p < 3) {
        throw std::invalid_argument("legendre: p must be an odd prime >= 3");
    }
    uint64_t r = static_cast<uint64_t>(((a % static_cast<int64_t>(p)) + static_cast<int64_t>(p))) % p;
    uint64_t e = pow_mod(r, (p - 1) / 2, p);
    if (e == 0) return 0;
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::invalid_argument("legendre: p is not prime");
}

FpElem::FpElem(int64_t value, uint64_t p) : p_(p) {
    check_odd_prime_modulus(p);
    int64_t sp = static_cast<int64_t>(p);
    value_ = static_cast<uint64_t>((value % sp + sp) % sp);
}

void FpElem::require_same(const FpElem& o) const {
    if (p_ != o.p_) {
        throw std::logic_error("FpElem modulus mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
}

FpElem FpElem::operator+(const FpElem& o) const {
    require_same(o);
    FpElem r = *this;
    r.value_ = value_ + o.value_;
    if (r.value_ >= p_) r.value_ -= p_;
    return r;
}

FpElem FpElem::operator-(const FpElem& o) const {
    require_same(o);
    FpElem r = *this;
    r.value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
    return r;
}

FpElem FpElem::operator*(const FpElem& o) const {
    require_same(o);
    FpElem r = *this;
    r.value_ = (value_ * o.value_) % p_;  // p < 2^31: product fits 64 bits
    return r;
}

FpElem FpElem::operator-() const {
    FpElem r = *this;
    r.value_ = value_ == 0 ? 0 : p_ - value_;
    return r;
}

FpElem FpElem::pow(uint64_t e) const {
    FpElem r = *this;
    r.value_ = pow_mod(value_, e, p_);
    return r;
}

FpElem FpElem::inverse() const {
    if (value_ == 0) throw std::invalid_argument("FpElem: zero has no inverse");
    return pow(p_ - 2);
}

std::optional<FpElem> sqrt_mod(const FpElem& a) {
    const uint64_t p = a.modulus();
    const uint64_t v = a.value();
    if (v == 0) return a;
    int chi = legendre(static_cast<int64_t>(v), p);
    if (chi == -1) return std::nullopt;

    uint64_t r;
    if (p % 4 == 3) {
        r = pow_mod(v, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
        uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        uint64_t z = 2;
        while (legendre(static_cast<int64_t>(z), p) != -1) ++z;  // smallest nonresidue
        uint64_t c = pow_mod(z, q, p);
        uint64_t t = pow_mod(v, q, p);
        r = pow_mod(v, (q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            uint64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    r = std::min(r, p - r);
    return FpElem(static_cast<int64_t>(r), p);
}

Fp2Elem::Fp2Elem(FpElem a, FpElem b, FpElem delta) : a_(a), b_(b), delta_(delta) {
    if (a.modulus() != b.modulus() || a.modulus() != delta.modulus()) {
        throw std::logic_error("Fp2Elem: component moduli differ");
    }
}

Fp2Elem Fp2Elem::one(const FpElem& delta) {
    const uint64_t p = delta.modulus();
    return Fp2Elem(FpElem(1, p), FpElem(0, p), delta);
}

void Fp2Elem::require_same(const Fp2Elem& o) const {
    if (modulus() != o.modulus() || !(delta_ == o.delta_)) {
        throw std::logic_error("Fp2Elem: mixed extensions (delta or modulus mismatch)");
    }
}

Fp2Elem Fp2Elem::operator+(const Fp2Elem& o) const {
    require_same(o);
    return Fp2Elem(a_ + o.a_, b_ + o.b_, delta_);
}

Fp2Elem Fp2Elem::operator-(const Fp2Elem& o) const {
    require_same(o);
    return Fp2Elem(a_ - o.a_, b_ - o.b_, delta_);
}

Fp2Elem Fp2Elem::operator*(const Fp2Elem& o) const {
    require_same(o);
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 delta) + (a1 b2 + a2 b1) s
    FpElem na = a_ * o.a_ + b_ * o.b_ * delta_;
    FpElem nb = a_ * o.b_ + o.a_ * b_;
    return Fp2Elem(na, nb, delta_);
}

Fp2Elem Fp2Elem::operator-() const { return Fp2Elem(-a_, -b_, delta_); }

FpElem Fp2Elem::norm() const { return a_ * a_ - b_ * b_ * delta_; }

Fp2Elem Fp2Elem::inverse() const {
    if (is_zero()) throw std::invalid_argument("Fp2Elem: zero has no inverse");
    FpElem ninv = norm().inverse();
    return Fp2Elem(a_ * ninv, -b_ * ninv, delta_);
}

Fp2Elem fp2_pow(Fp2Elem x, uint64_t n) {
    Fp2Elem result = Fp2Elem::one(x.delta());
    while (n > 0) {
        if (n & 1) result = result * x;
        x = x * x;
        n >>= 1;
    }
    return result;
}

std::vector<uint64_t> Factorization::divisors() const {
    std::vector<uint64_t> divs{1};
    for (const auto& [prime, exp] : factors) {
        const size_t base_count = divs.size();
        uint64_t pe = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pe *= prime;
            for (size_t i = 0; i < base_count; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

uint64_t Factorization::totient() const {
    uint64_t phi = 1;
    for (const auto& [prime, exp] : factors) {
        uint64_t pe = 1;
        for (unsigned e = 1; e < exp; ++e) pe *= prime;
        phi *= pe * (prime - 1);
    }
    return phi;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    // Brent's cycle variant; n odd composite, not a prime power issue here.
    for (uint64_t c = 1;; ++c) {
        auto step = [n, c](uint64_t x) {
            return (mul_mod(x, x, n) + c) % n;
        };
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int count = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mul_mod(q, diff, n);
            if (++count % 64 == 0) {
                d = std::gcd(q, n);
                q = 1;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        // cycle degenerated; retry with next polynomial
    }
}

void split_factor(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    split_factor(d, primes);
    split_factor(n / d, primes);
}

}  // namespace

Factorization factorize(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization fac;
    fac.n = n;
    uint64_t rest = n;
    std::vector<uint64_t> primes;
    for (uint64_t d : {2ull, 3ull}) {
        while (rest % d == 0) {
            primes.push_back(d);
            rest /= d;
        }
    }
    for (uint64_t d = 5; d <= kTrialBound && d * d <= rest; d += 6) {
        for (uint64_t e : {d, d + 2}) {
            while (rest % e == 0) {
                primes.push_back(e);
                rest /= e;
            }
        }
    }
    if (rest > 1) {
        if (rest <= kTrialBound * kTrialBound) {
            primes.push_back(rest);  // below the trial square: must be prime
        } else {
            split_factor(rest, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (uint64_t q : primes) {
        if (!fac.factors.empty() && fac.factors.back().first == q) {
            ++fac.factors.back().second;
        } else {
            fac.factors.emplace_back(q, 1);
        }
    }
    return fac;
}

uint64_t order_mod(const FpElem& x, const Factorization& group_order) {
    if (x.is_zero()) throw std::invalid_argument("order_mod: x must be nonzero");
    if (!(x.pow(group_order.n).value() == 1)) {
        throw std::invalid_argument("order_mod: x^group_order != 1 (wrong group order?)");
    }
    uint64_t t = group_order.n;
    for (const auto& [prime, exp] : group_order.factors) {
        for (unsigned e = 0; e < exp && t % prime == 0; ++e) {
            uint64_t cand = t / prime;
            if (x.pow(cand).value() == 1) {
                t = cand;
            } else {
                break;
            }
        }
    }
    return t;
}

uint64_t order_mod(const Fp2Elem& x, const Factorization& group_order) {
    if (x.is_zero()) throw std::invalid_argument("order_mod: x must be nonzero");
    const Fp2Elem one = Fp2Elem::one(x.delta());
    if (!(fp2_pow(x, group_order.n) == one)) {
        throw std::invalid_argument("order_mod: x^group_order != 1 (wrong group order?)");
    }
    uint64_t t = group_order.n;
    for (const auto& [prime, exp] : group_order.factors) {
        for (unsigned e = 0; e < exp && t % prime == 0; ++e) {
            uint64_t cand = t / prime;
            if (fp2_pow(x, cand) == one) {
                t = cand;
            } else {
                break;
            }
        }
    }
    return t;
}

bool is_primitive_root(const FpElem& x) {
    if (x.is_zero()) return false;
    return is_primitive_root(x, factorize(x.modulus() - 1));
}

bool is_primitive_root(const FpElem& x, const Factorization& p_minus_1) {
    if (x.is_zero()) return false;
    return order_mod(x, p_minus_1) == p_minus_1.n;
}

}  // namespace gfib
