#pragma once

// Exact arithmetic in Z_p and the quadratic extension K_p = Z_p[sqrt(delta)],
// plus the supporting integer machinery: quadratic-residue tests, Tonelli-Shanks
// square roots, deterministic Miller-Rabin, Pollard-rho factorization, and
// multiplicative orders. Moduli are odd primes p < 2^31 so every product fits
// a 64-bit intermediate.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gfib {

inline constexpr uint64_t kMaxModulus = (uint64_t{1} << 31) - 1;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(uint64_t n);

// Euler's criterion a^((p-1)/2); 0 iff p | a, +1 for nonzero residues, -1 otherwise.
// Rejects p even or p < 3.
int legendre(int64_t a, uint64_t p);

// A residue in [0, p) for a fixed odd prime p. Binary operations require equal
// moduli; a mismatch is a programming error and throws std::logic_error.
class FpElem {
public:
    FpElem() = default;
    FpElem(int64_t value, uint64_t p);

    uint64_t value() const { return value_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    FpElem operator+(const FpElem& o) const;
    FpElem operator-(const FpElem& o) const;
    FpElem operator*(const FpElem& o) const;
    FpElem operator-() const;
    bool operator==(const FpElem& o) const = default;

    FpElem pow(uint64_t e) const;
    FpElem inverse() const;  // p prime; throws on zero

private:
    uint64_t value_ = 0;
    uint64_t p_ = 0;

    void require_same(const FpElem& o) const;
};

// Canonical square root min(r, p-r) via Tonelli-Shanks with the smallest
// nonresidue as the auxiliary; empty exactly when legendre(a, p) = -1.
std::optional<FpElem> sqrt_mod(const FpElem& a);

// a + b*sqrt(delta) for a fixed nonresidue delta. Every element carries its
// delta; binary operations on mismatched deltas throw std::logic_error.
class Fp2Elem {
public:
    Fp2Elem() = default;
    Fp2Elem(FpElem a, FpElem b, FpElem delta);

    static Fp2Elem one(const FpElem& delta);

    const FpElem& a() const { return a_; }
    const FpElem& b() const { return b_; }
    const FpElem& delta() const { return delta_; }
    uint64_t modulus() const { return a_.modulus(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base_field() const { return b_.is_zero(); }

    Fp2Elem operator+(const Fp2Elem& o) const;
    Fp2Elem operator-(const Fp2Elem& o) const;
    Fp2Elem operator*(const Fp2Elem& o) const;
    Fp2Elem operator-() const;
    bool operator==(const Fp2Elem& o) const = default;

    FpElem norm() const;      // a^2 - b^2*delta
    Fp2Elem inverse() const;  // throws on zero

private:
    FpElem a_, b_, delta_;

    void require_same(const Fp2Elem& o) const;
};

Fp2Elem fp2_pow(Fp2Elem x, uint64_t n);

// Prime factorization with primes ascending; reassembles to n.
struct Factorization {
    uint64_t n = 1;
    std::vector<std::pair<uint64_t, unsigned>> factors;

    std::vector<uint64_t> divisors() const;  // ascending
    uint64_t totient() const;
};

// Trial division below a fixed bound, then Pollard rho with Miller-Rabin
// certification. n >= 1, n < 2^64.
Factorization factorize(uint64_t n);

// Least t with x^t = 1, given the factorization of a multiple of t
// (p-1 for Z_p, p^2-1 for K_p). Rejects x = 0 and x^group_order != 1.
uint64_t order_mod(const FpElem& x, const Factorization& group_order);
uint64_t order_mod(const Fp2Elem& x, const Factorization& group_order);

bool is_primitive_root(const FpElem& x);
bool is_primitive_root(const FpElem& x, const Factorization& p_minus_1);

}  // namespace gfib
