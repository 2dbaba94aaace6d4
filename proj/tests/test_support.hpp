#pragma once

// Shared test-only helpers: a numerical embedding of Q(zeta_n) used purely as
// an oracle, a deterministic pseudo-random generator, and the diagonal
// instance family for the invariant-isotropic brute-force oracle.

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "edc/cyclotomic.hpp"
#include "edc/cyc_matrix.hpp"
#include "edc/group.hpp"
#include "edc/obstruction.hpp"
#include "edc/representation.hpp"

namespace edc_test {

/// zeta_n -> exp(2*pi*i/n); test oracle only.
inline std::complex<double> embed(const edc::CycNum& x) {
    std::complex<double> sum = 0.0;
    const double tau = 6.283185307179586476925;
    for (unsigned k = 0; k < x.degree(); ++k) {
        double c = x.coeff(k).to_double();
        if (c == 0.0) continue;
        double angle = tau * k / x.conductor();
        sum += c * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    edc::Rat rat() { return edc::Rat(range(-6, 6), range(1, 5)); }
    edc::CycNum cyc(unsigned n) {
        std::vector<edc::Rat> raw(n);
        for (auto& r : raw) r = rat();
        return edc::CycNum::from_power_coeffs(n, raw);
    }
};

/// A diagonal multiplicity-free instance: a cyclic group of order m acting on
/// C^dim by distinct characters zeta_m^k, with an invariant symmetric pairing
/// that couples exactly the inverse-character coordinates.  The group lives
/// on the heap so the representation's back-pointer survives moves.
struct DiagonalInstance {
    std::shared_ptr<edc::MatrixGroup> group;
    edc::Representation rep;
    edc::GramForm gram;
    std::vector<unsigned> char_exponents; // k_j; the conductor is 12
};

inline edc::MatrixGroup cyclic_matrix_group(unsigned m) {
    // m-cycle permutation matrix over F3
    edc::FqMat cycle(edc::F3, static_cast<int>(m), static_cast<int>(m));
    for (unsigned i = 0; i < m; ++i) cycle.set(static_cast<int>((i + 1) % m), static_cast<int>(i), 1);
    return edc::MatrixGroup::closure({cycle}, m);
}

inline DiagonalInstance make_diagonal_instance(unsigned m, const std::vector<unsigned>& exponents,
                                               Rng& rng) {
    const unsigned cond = 12;
    int dim = static_cast<int>(exponents.size());
    auto g = std::make_shared<edc::MatrixGroup>(cyclic_matrix_group(m));
    edc::CycMat image(cond, dim, dim);
    for (int j = 0; j < dim; ++j)
        image.at(j, j) = edc::root_of_unity(cond, m, exponents[j]);
    edc::Representation rep = edc::Representation::graph_verify(*g, {image}, g->size());

    edc::CycMat gram(cond, dim, dim);
    std::vector<bool> done(dim, false);
    for (int i = 0; i < dim; ++i) {
        if (done[i]) continue;
        if ((2 * exponents[i]) % m == 0) {
            gram.at(i, i) = edc::CycNum::from_rat(cond, edc::Rat(rng.range(1, 4)));
            done[i] = true;
            continue;
        }
        for (int j = i + 1; j < dim; ++j) {
            if (done[j] || (exponents[i] + exponents[j]) % m != 0) continue;
            edc::CycNum v = edc::CycNum::from_rat(cond, edc::Rat(rng.range(1, 4)));
            gram.at(i, j) = v;
            gram.at(j, i) = v;
            done[i] = done[j] = true;
            break;
        }
        if (!done[i]) throw std::runtime_error("instance exponents do not pair up");
    }
    edc::GramForm form;
    form.gram = gram;
    form.invariance_certified = true;
    form.nondegenerate = (gram.rank() == dim);
    form.invariant_space_dim = edc::Rat(1);
    DiagonalInstance inst{std::move(g), std::move(rep), std::move(form), exponents};
    return inst;
}

/// Brute-force oracle: for a diagonal multiplicity-free action the invariant
/// subspaces are exactly the coordinate subsets, so the maximal invariant
/// isotropic dimension is the largest subset on which the gram vanishes.
inline int oracle_max_isotropic(const DiagonalInstance& inst) {
    int dim = inst.gram.gram.rows();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        bool iso = true;
        for (int i = 0; i < dim && iso; ++i)
            for (int j = 0; j < dim && iso; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !inst.gram.gram.at(i, j).is_zero())
                    iso = false;
        if (iso) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace edc_test
