#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edc {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Identifies one of the concrete finite fields in play: a prime field F_p,
/// or F_8 = F_2[t]/(t^3 + t + 1) (poly_bits encodes the modulus polynomial).
struct FieldId {
    std::uint16_t p = 0;
    std::uint16_t deg = 1;
    std::uint16_t poly_bits = 0;

    unsigned q() const {
        unsigned r = 1;
        for (unsigned i = 0; i < deg; ++i) r *= p;
        return r;
    }
    friend bool operator==(const FieldId& a, const FieldId& b) {
        return a.p == b.p && a.deg == b.deg && a.poly_bits == b.poly_bits;
    }
    friend bool operator!=(const FieldId& a, const FieldId& b) { return !(a == b); }
    std::string str() const;
};

inline constexpr FieldId F3{3, 1, 0};
inline constexpr FieldId F11{11, 1, 0};
inline constexpr FieldId F8{2, 3, 0b1011}; // t^3 + t + 1

FieldId prime_field(unsigned p);

/// Element of a finite field, canonical residue.  For prime fields the value
/// is the least nonnegative residue; for F_8 the bits of the representative
/// polynomial (bit i = coefficient of t^i).
class FqElem {
  public:
    FqElem() : fid_{0, 1, 0}, v_(0) {}
    FqElem(FieldId fid, unsigned v);

    FieldId field() const { return fid_; }
    unsigned value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.fid_ == b.fid_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    FqElem operator-() const;
    FqElem inverse() const;
    FqElem pow(unsigned long e) const;

    /// Text encoding: integers for prime fields, bit-polynomials in t for F_8.
    std::string str() const;

  private:
    FieldId fid_;
    std::uint8_t v_;
    static void check_same(const FqElem& a, const FqElem& b);
};

/// Legendre symbol of a in F_p, p an odd prime: 0 for a = 0, +1 for nonzero
/// squares, -1 otherwise.
int legendre(const FqElem& a);
int legendre(long a, unsigned p);

} // namespace edc
