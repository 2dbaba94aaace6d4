#include "edc/principal_series.hpp"

namespace edc {

PrincipalSeries principal_series_sl2_8(unsigned m, const MatrixGroup& sl2_8) {
    if (m < 1 || m > 6) throw rep_error("principal series parameter m must be in 1..6");
    if (sl2_8.field() != F8 || sl2_8.size() != 504)
        throw rep_error("expected SL2(F8) of order 504");
    const unsigned cond = 7;

    // Discrete logarithms in F8^* base t.
    std::array<int, 8> dlog{};
    dlog.fill(-1);
    {
        FqElem t(F8, 2), acc(F8, 1);
        for (int e = 0; e < 7; ++e) {
            dlog[acc.value()] = e;
            acc = acc * t;
        }
    }
    auto lambda = [&](unsigned a_val) {
        int e = dlog[a_val];
        if (e < 0) throw rep_error("lambda evaluated at zero");
        return CycNum::zeta_pow(cond, static_cast<long>(m) * e);
    };

    // Coset representatives for the projective line: lower unitriangular
    // matrices with parameter c in F8 (cosets [1 : c]), then the Weyl element
    // (coset [0 : 1]).
    std::vector<FqMat> reps;
    for (unsigned c = 0; c < 8; ++c)
        reps.push_back(FqMat::from_values(F8, 2, 2, {1, 0, static_cast<int>(c), 1}));
    reps.push_back(FqMat::from_values(F8, 2, 2, {0, 1, 1, 0}));
    const int ncosets = 9;

    auto image_of = [&](const FqMat& g) {
        CycMat img(cond, ncosets, ncosets);
        for (int y = 0; y < ncosets; ++y) {
            FqMat h = g * reps[y];
            FqElem a = h.elem(0, 0), c = h.elem(1, 0);
            int target;
            unsigned diag; // upper-left entry of the Borel factor
            if (!a.is_zero()) {
                target = static_cast<int>((c * a.inverse()).value());
                diag = a.value();
            } else {
                target = 8;
                diag = c.value();
            }
            // Factor check: reps[target]^-1 * h must be upper triangular.
            auto rinv = reps[target].inverse();
            FqMat b = *rinv * h;
            if (b.at(1, 0) != 0 || b.at(0, 0) != diag)
                throw rep_error("Borel factorization failed (internal error)");
            img.at(target, y) = lambda(diag);
        }
        return img;
    };

    std::vector<CycMat> images;
    for (const FqMat& g : sl2_8.generators()) images.push_back(image_of(g));

    PrincipalSeries ps;
    ps.group = &sl2_8;
    ps.m = m;
    ps.rep = Representation::graph_verify(sl2_8, std::move(images), sl2_8.size());

    Character chi = character_of(ps.rep);
    if (!(inner_product(chi, chi) == Rat(1)))
        throw rep_error("principal series came out reducible (cocycle bug)");
    return ps;
}

} // namespace edc
