#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace edc {

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational number, always in lowest terms with positive denominator.
/// Value wrapper around GMP so the canonical-form invariant is enforced at
/// construction and every value has a unique representation.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return v_.get_num() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// Rendered as "n" or "n/d".
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    void encode_into(std::vector<std::uint8_t>& out) const;
    static Rat decode_from(const std::uint8_t*& p, const std::uint8_t* end);

  private:
    mpq_class v_;
};

// Canonical little-endian byte coding for arbitrary-precision integers,
// shared by the operator-table serializer and the group cache.
void encode_mpz(const mpz_class& z, std::vector<std::uint8_t>& out);
mpz_class decode_mpz(const std::uint8_t*& p, const std::uint8_t* end);

} // namespace edc
