#include "edc/rat.hpp"

namespace edc {

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw arith_error("rational with zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw arith_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw arith_error("division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::inverse() const {
    if (is_zero()) throw arith_error("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

namespace {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t get_varint(const std::uint8_t*& p, const std::uint8_t* end) {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
        if (p == end) throw arith_error("truncated varint");
        std::uint8_t b = *p++;
        v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
        if (!(b & 0x80)) break;
        shift += 7;
        if (shift > 63) throw arith_error("varint overflow");
    }
    return v;
}

} // namespace

void encode_mpz(const mpz_class& z, std::vector<std::uint8_t>& out) {
    if (z == 0) {
        put_varint(out, 0);
        return;
    }
    std::size_t nbytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    put_varint(out, (static_cast<std::uint64_t>(nbytes) << 1) | (z < 0 ? 1u : 0u));
    std::size_t count = 0;
    std::size_t at = out.size();
    out.resize(at + nbytes);
    mpz_export(out.data() + at, &count, -1, 1, 0, 0, z.get_mpz_t());
    if (count != nbytes) throw arith_error("mpz export size mismatch");
}

mpz_class decode_mpz(const std::uint8_t*& p, const std::uint8_t* end) {
    std::uint64_t header = get_varint(p, end);
    if (header == 0) return mpz_class(0);
    std::size_t nbytes = static_cast<std::size_t>(header >> 1);
    bool neg = header & 1;
    if (static_cast<std::size_t>(end - p) < nbytes) throw arith_error("truncated integer");
    mpz_class z;
    mpz_import(z.get_mpz_t(), nbytes, -1, 1, 0, 0, p);
    p += nbytes;
    if (neg) z = -z;
    return z;
}

void Rat::encode_into(std::vector<std::uint8_t>& out) const {
    encode_mpz(num(), out);
    encode_mpz(den(), out);
}

Rat Rat::decode_from(const std::uint8_t*& p, const std::uint8_t* end) {
    mpz_class n = decode_mpz(p, end);
    mpz_class d = decode_mpz(p, end);
    if (d <= 0) throw arith_error("decoded rational with nonpositive denominator");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rat(q);
}

} // namespace edc
