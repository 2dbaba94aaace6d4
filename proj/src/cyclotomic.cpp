#include "edc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace edc {

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Integer polynomials, little-endian coefficients, used only to build Phi_n.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_x_pow_minus_one(unsigned n) {
    ZPoly f(n + 1);
    f[0] = -1;
    f[n] = 1;
    return f;
}

// Exact division of f by monic g.
ZPoly zpoly_div_exact(ZPoly f, const ZPoly& g) {
    ZPoly q(f.size() - g.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class c = f[i + g.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) f[i + j] -= c * g[j];
    }
    for (const mpz_class& c : f)
        if (c != 0) throw arith_error("non-exact polynomial division");
    return q;
}

ZPoly compute_cyclotomic(unsigned n);

const ZPoly& cached_cyclotomic(unsigned n) {
    // compute_cyclotomic recurses into divisors, so the lock must be reentrant
    static std::recursive_mutex mu;
    static std::map<unsigned, ZPoly> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

ZPoly compute_cyclotomic(unsigned n) {
    ZPoly f = zpoly_x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) f = zpoly_div_exact(std::move(f), cached_cyclotomic(d));
    }
    return f;
}

// Per-conductor reduction data: rows expressing z^k, k in [phi, n), in the
// canonical basis 1, z, ..., z^{phi-1}.
struct CycTable {
    unsigned n = 1;
    unsigned phi = 1;
    std::vector<std::vector<Rat>> high_power; // high_power[k - phi] for k in [phi, n)
};

const CycTable& table_for(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<CycTable>();
    t->n = n;
    t->phi = euler_phi(n);
    const ZPoly& phi_poly = cached_cyclotomic(n);
    // z^phi = -(phi_poly[0] + ... + phi_poly[phi-1] z^{phi-1}); extend upward.
    std::vector<Rat> row(t->phi);
    for (unsigned i = 0; i < t->phi; ++i) row[i] = -Rat(phi_poly[i]);
    for (unsigned k = t->phi; k < n; ++k) {
        t->high_power.push_back(row);
        // next row: multiply by z, fold the overflowing z^phi term back in.
        std::vector<Rat> next(t->phi);
        Rat top = row[t->phi - 1];
        for (unsigned i = t->phi - 1; i > 0; --i) next[i] = row[i - 1];
        next[0] = Rat(0);
        if (!top.is_zero()) {
            const std::vector<Rat>& base = t->high_power.front();
            for (unsigned i = 0; i < t->phi; ++i) next[i] += top * base[i];
        }
        row = std::move(next);
    }
    auto& slot = cache[n];
    slot = std::move(t);
    return *slot;
}

// Dense rational polynomials for the extended-Euclid inverse.
using QPoly = std::vector<Rat>;

int qdeg(const QPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return static_cast<int>(i);
    return -1;
}

QPoly qsub_scaled(QPoly f, const QPoly& g, const Rat& c, std::size_t shift) {
    if (f.size() < g.size() + shift) f.resize(g.size() + shift);
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= c * g[i];
    return f;
}

// Returns (q, r) with f = q*g + r, deg r < deg g.
std::pair<QPoly, QPoly> qdivmod(QPoly f, const QPoly& g) {
    int dg = qdeg(g);
    if (dg < 0) throw arith_error("polynomial division by zero");
    Rat lead = g[static_cast<std::size_t>(dg)];
    QPoly q;
    int df = qdeg(f);
    if (df >= dg) q.assign(static_cast<std::size_t>(df - dg) + 1, Rat(0));
    while ((df = qdeg(f)) >= dg) {
        Rat c = f[static_cast<std::size_t>(df)] / lead;
        std::size_t shift = static_cast<std::size_t>(df - dg);
        q[shift] = c;
        f = qsub_scaled(std::move(f), g, c, shift);
    }
    return {std::move(q), std::move(f)};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

} // namespace

CycNum CycNum::zero(unsigned n) {
    if (n < 1) throw conductor_error("conductor must be positive");
    return CycNum(n, std::vector<Rat>(table_for(n).phi));
}

CycNum CycNum::one(unsigned n) { return from_rat(n, Rat(1)); }

CycNum CycNum::from_rat(unsigned n, const Rat& r) {
    CycNum x = zero(n);
    x.c_[0] = r;
    return x;
}

CycNum CycNum::zeta_pow(unsigned n, long k) {
    std::vector<Rat> raw(n);
    long m = k % static_cast<long>(n);
    if (m < 0) m += n;
    raw[static_cast<std::size_t>(m)] = Rat(1);
    return from_power_coeffs(n, raw);
}

CycNum CycNum::from_power_coeffs(unsigned n, const std::vector<Rat>& raw) {
    if (n < 1) throw conductor_error("conductor must be positive");
    if (raw.size() != n) throw arith_error("power coefficient vector must have length n");
    const CycTable& t = table_for(n);
    std::vector<Rat> c(t.phi);
    for (unsigned k = 0; k < n; ++k) {
        if (raw[k].is_zero()) continue;
        if (k < t.phi) {
            c[k] += raw[k];
        } else {
            const std::vector<Rat>& row = t.high_power[k - t.phi];
            for (unsigned i = 0; i < t.phi; ++i) {
                if (!row[i].is_zero()) c[i] += raw[k] * row[i];
            }
        }
    }
    return CycNum(n, std::move(c));
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat CycNum::rational_part() const {
    if (!is_rational()) throw arith_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

void CycNum::check_same(const CycNum& a, const CycNum& b) {
    if (a.n_ != b.n_)
        throw conductor_error("mixed conductors " + std::to_string(a.n_) + " and " +
                              std::to_string(b.n_));
}

CycNum CycNum::operator-() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycNum(n_, std::move(c));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    CycNum::check_same(a, b);
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return CycNum(a.n_, std::move(c));
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    CycNum::check_same(a, b);
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return CycNum(a.n_, std::move(c));
}

CycNum& CycNum::operator+=(const CycNum& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    CycNum::check_same(a, b);
    const CycTable& t = table_for(a.n_);
    unsigned phi = t.phi;
    // Convolution with exponents folded mod n (z^n = 1), then high powers
    // reduced through the Phi_n rows.
    std::vector<Rat> raw(a.n_);
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            raw[(i + j) % a.n_] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rat> c(phi);
    for (unsigned k = 0; k < a.n_; ++k) {
        if (raw[k].is_zero()) continue;
        if (k < phi) {
            c[k] += raw[k];
        } else {
            const std::vector<Rat>& row = t.high_power[k - phi];
            for (unsigned i = 0; i < phi; ++i)
                if (!row[i].is_zero()) c[i] += raw[k] * row[i];
        }
    }
    return CycNum(a.n_, std::move(c));
}

CycNum operator*(const Rat& a, const CycNum& b) {
    std::vector<Rat> c(b.c_.size());
    if (!a.is_zero())
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * b.c_[i];
    return CycNum(b.n_, std::move(c));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw arith_error("inverse of zero cyclotomic value");
    const ZPoly& phi_poly = cached_cyclotomic(n_);
    QPoly f(c_.begin(), c_.end());
    QPoly m(phi_poly.size());
    for (std::size_t i = 0; i < phi_poly.size(); ++i) m[i] = Rat(phi_poly[i]);

    // Extended Euclid: maintain r0 = u0*f (mod m), r1 = u1*f (mod m).
    QPoly r0 = m, r1 = f;
    QPoly u0{Rat(0)}, u1{Rat(1)};
    while (qdeg(r1) > 0) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly u = qsub_scaled(u0, qmul(q, u1), Rat(1), 0);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    if (qdeg(r1) != 0) throw arith_error("element not invertible mod cyclotomic polynomial");
    Rat lead = r1[0];
    QPoly inv = qdivmod(u1, m).second;
    std::vector<Rat> c(degree());
    for (std::size_t i = 0; i < inv.size() && i < c.size(); ++i) c[i] = inv[i] / lead;
    return CycNum(n_, std::move(c));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::galois(long a) const {
    long m = a % static_cast<long>(n_);
    if (m < 0) m += n_;
    if (std::gcd(static_cast<unsigned>(m), n_) != 1)
        throw arith_error("galois exponent not coprime to conductor");
    std::vector<Rat> raw(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        raw[(k * static_cast<std::size_t>(m)) % n_] += c_[k];
    }
    return from_power_coeffs(n_, raw);
}

CycNum CycNum::lift(unsigned N) const {
    if (N % n_ != 0) throw conductor_error("lift target conductor not a multiple");
    if (N == n_) return *this;
    unsigned step = N / n_;
    std::vector<Rat> raw(N);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) raw[k * step] = c_[k];
    }
    return from_power_coeffs(N, raw);
}

std::string CycNum::str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rat v = c_[k];
        if (first) {
            if (v.sign() < 0) { os << "-"; v = -v; }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        if (k == 0) {
            os << v.str();
        } else {
            if (!(v == Rat(1))) os << v.str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    os << " (z = zeta_" << n_ << ")";
    return os.str();
}

int CycNum::cmp(const CycNum& a, const CycNum& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (b.c_[i] < a.c_[i]) return 1;
    }
    return 0;
}

void CycNum::encode_into(std::vector<std::uint8_t>& out) const {
    for (const Rat& r : c_) r.encode_into(out);
}

CycNum CycNum::decode_from(unsigned n, const std::uint8_t*& p, const std::uint8_t* end) {
    unsigned phi = table_for(n).phi;
    std::vector<Rat> c(phi);
    for (unsigned i = 0; i < phi; ++i) c[i] = Rat::decode_from(p, end);
    return CycNum(n, std::move(c));
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) { return cached_cyclotomic(n); }

CycNum gauss_sum(unsigned p, unsigned conductor) {
    bool prime = p > 2;
    for (unsigned d = 2; d * d <= p && prime; ++d)
        if (p % d == 0) prime = false;
    if (!prime || p == 2) throw arith_error("gauss_sum requires an odd prime");
    if (conductor % p != 0) throw conductor_error("conductor not divisible by p");
    CycNum g = CycNum::zero(conductor);
    unsigned step = conductor / p;
    for (unsigned x = 0; x < p; ++x)
        g += CycNum::zeta_pow(conductor, static_cast<long>(((x * x) % p) * step));
    return g;
}

} // namespace edc
