#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edc/rat.hpp"

namespace edc {

struct conductor_error : arith_error {
    using arith_error::arith_error;
};

/// Element of the cyclotomic field Q(zeta_n), stored as its canonical
/// coordinate vector of length phi(n) in the power basis 1, z, ..., z^{phi-1},
/// reduced modulo the n-th cyclotomic polynomial.  Two elements are equal as
/// field elements iff their coordinate vectors are identical.  The conductor
/// is fixed per value; mixing conductors in arithmetic is a hard error.
class CycNum {
  public:
    CycNum() : n_(1), c_(1) {}

    static CycNum zero(unsigned n);
    static CycNum one(unsigned n);
    static CycNum from_rat(unsigned n, const Rat& r);
    static CycNum zeta_pow(unsigned n, long k);
    /// Canonical reduction of sum raw[k] * zeta_n^k, raw indexed by powers 0..n-1.
    static CycNum from_power_coeffs(unsigned n, const std::vector<Rat>& raw);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size()); }
    const Rat& coeff(unsigned k) const { return c_[k]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The value as a Rat; throws if the element is not rational.
    Rat rational_part() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const Rat& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Multiplicative inverse via extended Euclid in Q[x] mod Phi_n.
    CycNum inverse() const;

    /// Image under the Galois automorphism zeta -> zeta^a, gcd(a, n) = 1.
    CycNum galois(long a) const;
    /// Complex conjugate: zeta -> zeta^{n-1}.
    CycNum conj() const { return galois(static_cast<long>(n_) - 1); }

    /// Re-expression in Q(zeta_N) for n | N.
    CycNum lift(unsigned N) const;

    /// Canonical text rendering "a0 + a1*z + ..." with conductor annotation.
    std::string str() const;

    /// Total order on values of one conductor (coordinate-wise); used only
    /// to fix deterministic orderings, no arithmetic meaning.
    static int cmp(const CycNum& a, const CycNum& b);

    void encode_into(std::vector<std::uint8_t>& out) const;
    static CycNum decode_from(unsigned n, const std::uint8_t*& p, const std::uint8_t* end);

  private:
    unsigned n_;
    std::vector<Rat> c_;

    CycNum(unsigned n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    static void check_same(const CycNum& a, const CycNum& b);
};

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic).
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

/// Quadratic Gauss sum g = sum_{x in F_p} zeta_p^{x^2}, expressed in
/// Q(zeta_conductor) with p | conductor; g^2 = (-1)^{(p-1)/2} * p.
CycNum gauss_sum(unsigned p, unsigned conductor);
inline CycNum gauss_sum(unsigned p) { return gauss_sum(p, p); }

} // namespace edc
