#include "edc/fq.hpp"

namespace edc {

std::string FieldId::str() const {
    if (deg == 1) return "F" + std::to_string(p);
    return "F" + std::to_string(q());
}

FieldId prime_field(unsigned p) {
    if (p < 2 || p > 0xffff) throw field_error("unsupported prime field");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw field_error("field order not prime");
    return FieldId{static_cast<std::uint16_t>(p), 1, 0};
}

FqElem::FqElem(FieldId fid, unsigned v) : fid_(fid) {
    if (fid.deg == 1) {
        v_ = static_cast<std::uint8_t>(v % fid.p);
    } else {
        if (v >= fid.q()) throw field_error("extension field value out of range");
        v_ = static_cast<std::uint8_t>(v);
    }
}

void FqElem::check_same(const FqElem& a, const FqElem& b) {
    if (a.fid_ != b.fid_)
        throw field_error("field mismatch: " + a.fid_.str() + " vs " + b.fid_.str());
}

namespace {

// Carry-less multiply then reduce by the modulus polynomial (deg 3, F_8).
unsigned gf2_mul_mod(unsigned a, unsigned b, unsigned poly, unsigned deg) {
    unsigned prod = 0;
    for (unsigned i = 0; a >> i; ++i)
        if ((a >> i) & 1) prod ^= b << i;
    for (unsigned i = 2 * deg; i-- > deg;)
        if ((prod >> i) & 1) prod ^= poly << (i - deg);
    return prod;
}

} // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
    FqElem::check_same(a, b);
    if (a.fid_.p == 2) return FqElem(a.fid_, a.v_ ^ b.v_);
    return FqElem(a.fid_, (a.v_ + b.v_) % a.fid_.p);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    FqElem::check_same(a, b);
    if (a.fid_.p == 2) return FqElem(a.fid_, a.v_ ^ b.v_);
    return FqElem(a.fid_, (a.v_ + a.fid_.p - b.v_) % a.fid_.p);
}

FqElem FqElem::operator-() const {
    if (fid_.p == 2) return *this;
    return FqElem(fid_, (fid_.p - v_) % fid_.p);
}

FqElem operator*(const FqElem& a, const FqElem& b) {
    FqElem::check_same(a, b);
    if (a.fid_.deg == 1) return FqElem(a.fid_, (unsigned(a.v_) * b.v_) % a.fid_.p);
    return FqElem(a.fid_, gf2_mul_mod(a.v_, b.v_, a.fid_.poly_bits, a.fid_.deg));
}

FqElem FqElem::pow(unsigned long e) const {
    FqElem r(fid_, fid_.deg == 1 ? 1u % fid_.p : 1u);
    FqElem base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw field_error("inversion of zero in " + fid_.str());
    return pow(fid_.q() - 2);
}

std::string FqElem::str() const {
    if (fid_.deg == 1) return std::to_string(v_);
    if (v_ == 0) return "0";
    std::string s;
    for (unsigned i = fid_.deg; i-- > 0;) {
        if (!((v_ >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += "t";
        else s += "t^" + std::to_string(i);
    }
    return s;
}

int legendre(const FqElem& a) {
    if (a.field().deg != 1 || a.field().p == 2)
        throw field_error("legendre symbol needs an odd prime field");
    return legendre(a.value(), a.field().p);
}

int legendre(long a, unsigned p) {
    if (p == 2) throw field_error("legendre symbol needs an odd prime");
    long r = a % static_cast<long>(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler criterion.
    unsigned long e = (p - 1) / 2;
    unsigned long base = static_cast<unsigned long>(r), acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

} // namespace edc
