#include "edc/weil.hpp"

namespace edc {

namespace {

// Change of basis into even/odd function coordinates and block extraction.
struct ParitySplit {
    CycMat even_basis; // n x ne, columns
    CycMat odd_basis;  // n x no
    CycMat to_split;   // S^-1 with S = [even | odd]
    int ne = 0, no = 0;
};

// points: the enumeration of F_p^k underlying the function space;
// negate(i) gives the index of -points[i].  Even basis: delta_0 and
// delta_v + delta_{-v}; odd basis: delta_v - delta_{-v}.
ParitySplit parity_split(unsigned conductor, int npoints,
                         const std::vector<int>& negate) {
    std::vector<int> fixed, pos, neg;
    std::vector<bool> seen(npoints, false);
    for (int i = 0; i < npoints; ++i) {
        if (seen[i]) continue;
        seen[i] = true;
        if (negate[i] == i) {
            fixed.push_back(i);
        } else {
            seen[negate[i]] = true;
            pos.push_back(i);
            neg.push_back(negate[i]);
        }
    }
    ParitySplit sp;
    sp.ne = static_cast<int>(fixed.size() + pos.size());
    sp.no = static_cast<int>(pos.size());
    CycNum one = CycNum::one(conductor);
    CycMat s(conductor, npoints, npoints);
    int col = 0;
    for (int i : fixed) s.at(i, col++) = one;
    for (std::size_t t = 0; t < pos.size(); ++t) {
        s.at(pos[t], col) = one;
        s.at(neg[t], col) = one;
        ++col;
    }
    for (std::size_t t = 0; t < pos.size(); ++t) {
        s.at(pos[t], col) = one;
        s.at(neg[t], col) = -one;
        ++col;
    }
    auto inv = s.inverse();
    if (!inv) throw rep_error("parity basis is singular (internal error)");
    sp.to_split = *inv;
    sp.even_basis = CycMat(conductor, npoints, sp.ne);
    for (int i = 0; i < npoints; ++i)
        for (int j = 0; j < sp.ne; ++j) sp.even_basis.at(i, j) = s.at(i, j);
    sp.odd_basis = CycMat(conductor, npoints, sp.no);
    for (int i = 0; i < npoints; ++i)
        for (int j = 0; j < sp.no; ++j) sp.odd_basis.at(i, j) = s.at(i, sp.ne + j);
    return sp;
}

struct Blocks {
    CycMat even, odd;
};

Blocks split_blocks(const ParitySplit& sp, const CycMat& a) {
    CycMat full = sp.to_split * a;
    // columns of S: even then odd
    int n = a.rows();
    CycMat s(a.conductor(), n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < sp.ne; ++j) s.at(i, j) = sp.even_basis.at(i, j);
        for (int j = 0; j < sp.no; ++j) s.at(i, sp.ne + j) = sp.odd_basis.at(i, j);
    }
    full = full * s;
    Blocks b{CycMat(a.conductor(), sp.ne, sp.ne), CycMat(a.conductor(), sp.no, sp.no)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const CycNum& v = full.at(i, j);
            bool ie = i < sp.ne, je = j < sp.ne;
            if (ie && je) {
                b.even.at(i, j) = v;
            } else if (!ie && !je) {
                b.odd.at(i - sp.ne, j - sp.ne) = v;
            } else if (!v.is_zero()) {
                throw rep_error("parity subspaces are not invariant (internal error)");
            }
        }
    return b;
}

int ivalue(unsigned p, long v) {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<int>(r);
}

} // namespace

WeilSplit weil_sp4_f3(const MatrixGroup& sp4, const MatrixGroup& psp4) {
    const unsigned p = 3, cond = 3;
    const int npoints = 9;
    if (sp4.size() != 51840) throw rep_error("expected Sp4(F3) of order 51840");
    if (psp4.size() != 25920) throw rep_error("expected PSp4(F3) of order 25920");

    auto idx = [&](int x1, int x2) { return 3 * x1 + x2; };
    std::vector<int> negate(npoints);
    for (int x1 = 0; x1 < 3; ++x1)
        for (int x2 = 0; x2 < 3; ++x2)
            negate[idx(x1, x2)] = idx(ivalue(p, -x1), ivalue(p, -x2));

    // Images of the four generators produced by sp4_f3_generators():
    // U_{diag(1,0)}, Levi(u), Levi(s), Weyl.
    auto zeta = [&](long e) { return CycNum::zeta_pow(cond, e); };

    CycMat img_u(cond, npoints, npoints);
    for (int x1 = 0; x1 < 3; ++x1)
        for (int x2 = 0; x2 < 3; ++x2)
            img_u.at(idx(x1, x2), idx(x1, x2)) = zeta(x1 * x1);

    // Levi diag(g, g^-T) acts by f(x) -> legendre(det g) f(g^T x).
    auto levi_image = [&](int a, int b, int c, int d) {
        long det = a * d - b * c;
        Rat sign(legendre(det, p));
        CycMat m(cond, npoints, npoints);
        for (int x1 = 0; x1 < 3; ++x1)
            for (int x2 = 0; x2 < 3; ++x2) {
                int y1 = ivalue(p, a * x1 + c * x2); // g^T x
                int y2 = ivalue(p, b * x1 + d * x2);
                m.at(idx(x1, x2), idx(y1, y2)) = CycNum::from_rat(cond, sign);
            }
        return m;
    };
    CycMat img_lu = levi_image(1, 1, 0, 1);
    CycMat img_ls = levi_image(0, 1, 1, 0);

    // Fourier operator with the certified normalization gamma = g^-2 = -1/3
    // and doubled cross term.
    CycMat img_w(cond, npoints, npoints);
    Rat gamma(-1, 3);
    for (int x1 = 0; x1 < 3; ++x1)
        for (int x2 = 0; x2 < 3; ++x2)
            for (int y1 = 0; y1 < 3; ++y1)
                for (int y2 = 0; y2 < 3; ++y2)
                    img_w.at(idx(x1, x2), idx(y1, y2)) =
                        gamma * zeta(2 * (x1 * y1 + x2 * y2));

    WeilSplit ws;
    ws.group = &sp4;
    ws.quotient = &psp4;
    ws.normalization = "gamma=-1/3, quadratic exponent x^T b x, cross term 2 x.y";
    ws.full = Representation::graph_verify(sp4, {img_u, img_lu, img_ls, img_w}, sp4.size());

    // rho(-I) must be a scalar multiple of the parity operator.
    FqMat neg_id = -FqMat::identity(F3, 4);
    auto neg_idx = sp4.index_of(neg_id);
    if (!neg_idx) throw rep_error("-I not found in Sp4(F3)");
    CycMat rho_neg = ws.full.operator_at(*neg_idx);
    CycMat parity(cond, npoints, npoints);
    for (int i = 0; i < npoints; ++i) parity.at(i, negate[i]) = CycNum::one(cond);
    auto scalar = (rho_neg * parity).scalar_value(); // parity^2 = I
    if (!scalar || !scalar->is_rational())
        throw rep_error("central element does not act by a scalar times parity");
    ws.central_scalar = scalar->rational_part();

    ParitySplit sp = parity_split(cond, npoints, negate);
    ws.even_basis = sp.even_basis;
    ws.odd_basis = sp.odd_basis;

    std::vector<CycMat> even_images, odd_images;
    for (const CycMat& a : ws.full.generator_images()) {
        Blocks b = split_blocks(sp, a);
        even_images.push_back(std::move(b.even));
        odd_images.push_back(std::move(b.odd));
    }
    ws.even_on_quotient =
        Representation::graph_verify(psp4, even_images, psp4.size());
    ws.even = Representation::via_quotient(sp4, psp4, *ws.even_on_quotient);
    ws.odd = Representation::graph_verify(sp4, odd_images, sp4.size());
    return ws;
}

WeilSplit weil_sl2(unsigned p, const MatrixGroup& sl2, const MatrixGroup& psl2) {
    if (p != 3 && p != 11) throw rep_error("weil_sl2 supports p in {3, 11}");
    const unsigned cond = p;
    const int npoints = static_cast<int>(p);
    if (sl2.size() != static_cast<std::size_t>(p) * (p * p - 1))
        throw rep_error("SL2(F_p) has unexpected order");

    std::vector<int> negate(npoints);
    for (int x = 0; x < npoints; ++x) negate[x] = ivalue(p, -x);
    CycMat parity(cond, npoints, npoints);
    for (int i = 0; i < npoints; ++i) parity.at(i, negate[i]) = CycNum::one(cond);

    CycNum g = gauss_sum(p, cond);
    CycNum ginv = g.inverse();

    // Candidate normalizations for (multiplier scale s, cross term c, gamma);
    // the derived convention (s=1, c=2, gamma=-1/g for p = 3 mod 4) first.
    struct Cand {
        long s;
        long c;
        CycNum gamma;
        std::string label;
    };
    std::vector<Cand> cands;
    for (int sign : {-1, +1})
        for (long s : {1L, static_cast<long>((p + 1) / 2)})
            for (long c : {2 * s, static_cast<long>(ivalue(p, -2 * s))}) {
                CycNum gam = sign < 0 ? -ginv : ginv;
                cands.push_back({s, c, gam,
                                 "s=" + std::to_string(s) + ", c=" + std::to_string(c) +
                                     ", gamma=" + std::string(sign < 0 ? "-" : "+") + "1/g"});
            }

    auto build_images = [&](const Cand& cand) {
        CycMat img_u(cond, npoints, npoints);
        for (int x = 0; x < npoints; ++x)
            img_u.at(x, x) = CycNum::zeta_pow(cond, cand.s * x * x);
        CycMat img_w(cond, npoints, npoints);
        for (int x = 0; x < npoints; ++x)
            for (int y = 0; y < npoints; ++y)
                img_w.at(x, y) = cand.gamma * CycNum::zeta_pow(cond, cand.c * x * y);
        return std::vector<CycMat>{img_u, img_w};
    };

    auto steinberg_ok = [&](const std::vector<CycMat>& img) {
        // w = u * (w u w^-1) * u must already hold on the images.
        auto winv = img[1].inverse();
        if (!winv) return false;
        CycMat lhs = img[1];
        CycMat rhs = img[0] * (img[1] * img[0] * *winv) * img[0];
        return lhs == rhs;
    };

    FqMat neg_id = -FqMat::identity(prime_field(p), 2);
    auto neg_idx = sl2.index_of(neg_id);
    if (!neg_idx) throw rep_error("-I not found in SL2");

    for (const Cand& cand : cands) {
        std::vector<CycMat> img = build_images(cand);
        if (!steinberg_ok(img)) continue;
        Representation full;
        try {
            full = Representation::graph_verify(sl2, img, sl2.size());
        } catch (const graph_closure_error&) {
            continue;
        }
        CycMat rho_neg = full.operator_at(*neg_idx);
        auto scalar = (rho_neg * parity).scalar_value();
        if (!scalar || !scalar->is_rational()) continue;
        Rat central = scalar->rational_part();
        // Required convention: -I acts trivially on the odd part, i.e. the
        // scalar on odd functions, central * (-1), equals +1.
        if (!(central == Rat(-1))) continue;

        WeilSplit ws;
        ws.group = &sl2;
        ws.quotient = &psl2;
        ws.normalization = cand.label;
        ws.full = std::move(full);
        ws.central_scalar = central;
        ParitySplit sp = parity_split(cond, npoints, negate);
        ws.even_basis = sp.even_basis;
        ws.odd_basis = sp.odd_basis;
        std::vector<CycMat> even_images, odd_images;
        for (const CycMat& a : ws.full.generator_images()) {
            Blocks b = split_blocks(sp, a);
            even_images.push_back(std::move(b.even));
            odd_images.push_back(std::move(b.odd));
        }
        ws.even = Representation::graph_verify(sl2, even_images, sl2.size());
        ws.odd_on_quotient = Representation::graph_verify(psl2, odd_images, psl2.size());
        ws.odd = Representation::via_quotient(sl2, psl2, *ws.odd_on_quotient);
        return ws;
    }
    throw rep_error("no Fourier normalization certified for SL2(F_" + std::to_string(p) +
                    ") with -I trivial on the odd part");
}

} // namespace edc
