#include "edc/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace edc {

namespace {

std::optional<CycNum> sqrt_of_zeta_power(unsigned n, unsigned j) {
    j %= n;
    if (j % 2 == 0) return CycNum::zeta_pow(n, j / 2);
    if (n % 2 == 1) return CycNum::zeta_pow(n, (j + n) / 2);
    return std::nullopt;
}

std::optional<CycNum> sqrt_of_rational(unsigned n, const Rat& r) {
    if (r.is_zero()) return CycNum::zero(n);
    // sqrt(num/den) = sqrt(num*den)/den.
    mpz_class s = r.num() * r.den();
    bool negative = s < 0;
    if (negative) s = -s;
    mpz_class root = 1;
    std::vector<unsigned> squarefree;
    for (unsigned p = 2; mpz_class(p) * p <= s && p < 2000000; ++p) {
        unsigned e = 0;
        while (s % p == 0) {
            s /= p;
            ++e;
        }
        for (unsigned t = 0; t < e / 2; ++t) root *= p;
        if (e % 2) squarefree.push_back(p);
    }
    if (s > 1) {
        if (!s.fits_uint_p()) return std::nullopt;
        squarefree.push_back(s.get_ui());
    }
    CycNum acc = CycNum::from_rat(n, Rat(root) / Rat(r.den()));
    for (unsigned p : squarefree) {
        if (p == 2) {
            if (n % 8 != 0) return std::nullopt;
            acc *= CycNum::zeta_pow(n, n / 8) + CycNum::zeta_pow(n, -(long)(n / 8));
        } else {
            if (n % p != 0) return std::nullopt;
            acc *= gauss_sum(p, n); // squares to (-1)^((p-1)/2) * p
        }
    }
    // Fix the residual sign with a fourth root of unity if available.
    CycNum target = CycNum::from_rat(n, r);
    if (acc * acc == target) return acc;
    if (n % 4 == 0) {
        CycNum i4 = CycNum::zeta_pow(n, n / 4);
        if ((acc * i4) * (acc * i4) == target) return acc * i4;
    }
    return std::nullopt;
}

} // namespace

std::optional<CycNum> cyc_sqrt(const CycNum& d) {
    unsigned n = d.conductor();
    if (d.is_zero()) return CycNum::zero(n);
    for (unsigned j = 0; j < n; ++j) {
        CycNum u = d * CycNum::zeta_pow(n, -(long)j);
        if (!u.is_rational()) continue;
        auto sz = sqrt_of_zeta_power(n, j);
        if (!sz) continue;
        auto sr = sqrt_of_rational(n, u.rational_part());
        if (!sr) continue;
        CycNum s = *sr * *sz;
        if (s * s == d) return s;
    }
    return std::nullopt;
}

namespace {

CycNum form_value(const CycMat& gram, const std::vector<CycNum>& v, const std::vector<CycNum>& w) {
    CycNum sum = CycNum::zero(gram.conductor());
    for (int i = 0; i < gram.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < gram.cols(); ++j) {
            if (gram.at(i, j).is_zero() || w[j].is_zero()) continue;
            sum += v[i] * gram.at(i, j) * w[j];
        }
    }
    return sum;
}

std::vector<CycNum> unit_vector(unsigned n, int dim, int k) {
    std::vector<CycNum> v(dim, CycNum::zero(n));
    v[k] = CycNum::one(n);
    return v;
}

// One isotropic vector for a non-degenerate symmetric form, by zero-diagonal
// inspection and then completion of squares on coordinate pairs with a
// recognizable square root.
std::optional<std::vector<CycNum>> isotropic_vector(const CycMat& gram) {
    unsigned n = gram.conductor();
    int m = gram.rows();
    for (int i = 0; i < m; ++i)
        if (gram.at(i, i).is_zero()) return unit_vector(n, m, i);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const CycNum& a = gram.at(i, i);
            const CycNum& b = gram.at(i, j);
            const CycNum& c = gram.at(j, j);
            // q(e_i + t e_j) = a + 2bt + ct^2 = 0
            auto s = cyc_sqrt(b * b - a * c);
            if (!s) continue;
            CycNum t = (-b + *s) / c;
            std::vector<CycNum> v = unit_vector(n, m, i);
            v[j] = t;
            if (!form_value(gram, v, v).is_zero())
                throw obstruction_error("isotropic vector verification failed (internal error)");
            return v;
        }
    return std::nullopt;
}

// floor(m/2)-dimensional totally isotropic subspace of a non-degenerate
// symmetric form, by hyperbolic-plane peeling.  Rows returned in the
// coordinates of the given gram.
std::vector<std::vector<CycNum>> isotropic_subspace(const CycMat& gram0, int target) {
    unsigned n = gram0.conductor();
    std::vector<std::vector<CycNum>> rows;
    if (target == 0) return rows;
    int m0 = gram0.rows();
    CycMat gram = gram0;
    // change-of-coordinates rows: current space basis in original coordinates
    std::vector<std::vector<CycNum>> chart;
    for (int i = 0; i < m0; ++i) chart.push_back(unit_vector(n, m0, i));

    for (int step = 0; step < target; ++step) {
        auto v = isotropic_vector(gram);
        if (!v)
            throw obstruction_error(
                "isotropic witness needs a square root outside the supported conductor");
        int m = gram.rows();
        std::vector<CycNum> v0(m0, CycNum::zero(n));
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m0; ++l) v0[l] += (*v)[k] * chart[k][l];
        rows.push_back(v0);
        if (step + 1 == target) break;

        // pick u with B(v, u) != 0, then pass to the orthogonal complement of
        // the hyperbolic pair {v, u}
        std::vector<CycNum> bv(m, CycNum::zero(n));
        for (int i = 0; i < m; ++i) bv[i] = form_value(gram, *v, unit_vector(n, m, i));
        int upick = -1;
        for (int i = 0; i < m; ++i)
            if (!bv[i].is_zero()) { upick = i; break; }
        if (upick < 0) throw obstruction_error("degenerate form during peeling (internal error)");
        std::vector<CycNum> bu(m, CycNum::zero(n));
        std::vector<CycNum> u = unit_vector(n, m, upick);
        for (int i = 0; i < m; ++i) bu[i] = form_value(gram, u, unit_vector(n, m, i));
        CycMat constraints(n, 2, m);
        for (int i = 0; i < m; ++i) {
            constraints.at(0, i) = bv[i];
            constraints.at(1, i) = bu[i];
        }
        Subspace comp = kernel(constraints);
        if (comp.dim() != m - 2)
            throw obstruction_error("hyperbolic complement has wrong dimension (internal error)");
        CycMat basis = comp.basis_matrix();
        // new chart and restricted gram
        std::vector<std::vector<CycNum>> new_chart;
        for (int r = 0; r < comp.dim(); ++r) {
            std::vector<CycNum> row(m0, CycNum::zero(n));
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m0; ++l) row[l] += basis.at(r, k) * chart[k][l];
            new_chart.push_back(std::move(row));
        }
        gram = basis * gram * basis.transpose();
        chart = std::move(new_chart);
    }
    return rows;
}

bool char_product_trivial(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        CycNum prod = a[i] * b[i];
        if (!(prod == CycNum::one(prod.conductor()))) return false;
    }
    return true;
}

} // namespace

IsotropyCertificate max_invariant_isotropic(const IsotypicDecomposition& dec,
                                            const GramForm& gram) {
    unsigned n = dec.conductor;
    if (gram.gram.conductor() != n)
        throw conductor_error("decomposition and form conductors differ");
    if (!gram.nondegenerate)
        throw obstruction_error("max_invariant_isotropic requires a non-degenerate form");

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < dec.components.size(); ++i)
        if (dec.components[i].dim > 0) active.push_back(i);

    IsotropyCertificate cert;
    cert.blocks_verified = true;

    // Orthogonality of components with non-inverse characters.
    for (std::size_t ia = 0; ia < active.size(); ++ia)
        for (std::size_t ib = ia; ib < active.size(); ++ib) {
            const auto& ca = dec.components[active[ia]];
            const auto& cb = dec.components[active[ib]];
            if (char_product_trivial(ca.char_values, cb.char_values)) continue;
            CycMat block = ca.space.basis_matrix() * gram.gram * cb.space.basis_matrix().transpose();
            if (!block.is_zero()) cert.blocks_verified = false;
        }
    if (!cert.blocks_verified)
        throw obstruction_error("gram blocks between non-inverse characters are nonzero; "
                                "form is not invariant for this decomposition");

    // Pairing classes.
    std::vector<bool> used(dec.components.size(), false);
    for (std::size_t ia = 0; ia < active.size(); ++ia) {
        std::size_t i = active[ia];
        if (used[i]) continue;
        const auto& ci = dec.components[i];
        if (char_product_trivial(ci.char_values, ci.char_values)) {
            used[i] = true;
            CycMat restr = restrict_form(gram.gram, ci.space);
            if (restr.rank() != ci.dim)
                throw obstruction_error(
                    "form degenerate on a self-inverse component (internal error)");
            cert.pairing.push_back({{i}, true, ci.dim});
            continue;
        }
        std::size_t partner = SIZE_MAX;
        for (std::size_t ib = ia + 1; ib < active.size(); ++ib) {
            std::size_t j = active[ib];
            if (used[j]) continue;
            if (char_product_trivial(ci.char_values, dec.components[j].char_values)) {
                partner = j;
                break;
            }
        }
        if (partner == SIZE_MAX)
            throw obstruction_error("component has no inverse partner of positive dimension");
        if (dec.components[partner].dim != ci.dim)
            throw obstruction_error("inverse-pair components have different dimensions");
        used[i] = used[partner] = true;
        cert.pairing.push_back({{i, partner}, false, ci.dim});
    }

    for (const PairingClass& pc : cert.pairing)
        cert.max_isotropic_dim += pc.self_inverse ? pc.dim / 2 : pc.dim;

    // Witness: whole C_alpha for each inverse pair; an exact isotropic
    // floor(d/2)-subspace inside each self-inverse component, constructed
    // over the ambient conductor or, if a square root of -1 is needed, over
    // lcm(n, 4).
    unsigned wcond = n;
    int ambient = gram.gram.rows();
    std::vector<std::pair<std::size_t, std::vector<std::vector<CycNum>>>> pieces;
    for (const PairingClass& pc : cert.pairing) {
        if (!pc.self_inverse) {
            pieces.push_back({pc.component_indices[0], dec.components[pc.component_indices[0]].space.basis()});
            continue;
        }
        if (pc.dim < 2) continue;
        std::size_t i = pc.component_indices[0];
        const auto& comp = dec.components[i];
        CycMat restr = restrict_form(gram.gram, comp.space);
        std::vector<std::vector<CycNum>> local;
        unsigned piece_cond = n;
        try {
            local = isotropic_subspace(restr, pc.dim / 2);
        } catch (const obstruction_error&) {
            piece_cond = std::lcm(n, 4u);
            local = isotropic_subspace(restr.lift(piece_cond), pc.dim / 2);
        }
        wcond = std::max(wcond, piece_cond);
        // back to ambient coordinates
        std::vector<std::vector<CycNum>> ambient_rows;
        for (const auto& lv : local) {
            std::vector<CycNum> row(ambient, CycNum::zero(piece_cond));
            for (std::size_t k = 0; k < lv.size(); ++k) {
                if (lv[k].is_zero()) continue;
                for (int l = 0; l < ambient; ++l)
                    row[l] += lv[k] * comp.space.basis()[k][l].lift(piece_cond);
            }
            ambient_rows.push_back(std::move(row));
        }
        pieces.push_back({i, std::move(ambient_rows)});
    }

    std::vector<std::vector<CycNum>> wrows;
    for (auto& [ci, rows] : pieces)
        for (auto& r : rows) {
            std::vector<CycNum> lifted;
            lifted.reserve(r.size());
            for (const CycNum& x : r) lifted.push_back(x.conductor() == wcond ? x : x.lift(wcond));
            wrows.push_back(std::move(lifted));
        }

    // Exact verification: totally isotropic and inside its isotypic component
    // (hence invariant: the subgroup acts on each component by a scalar).
    CycMat gw = gram.gram.lift(wcond);
    for (const auto& r1 : wrows)
        for (const auto& r2 : wrows)
            if (!form_value(gw, r1, r2).is_zero())
                throw obstruction_error("witness failed the isotropy check (internal error)");
    std::size_t row_at = 0;
    for (auto& [ci, rows] : pieces) {
        CycMat proj = dec.components[ci].projector.lift(wcond);
        for (std::size_t t = 0; t < rows.size(); ++t, ++row_at) {
            std::vector<CycNum> pv = apply_matrix(proj, wrows[row_at]);
            if (pv != wrows[row_at])
                throw obstruction_error("witness left its isotypic component (internal error)");
        }
    }

    Subspace witness(wcond, ambient, wrows);
    if (witness.dim() != cert.max_isotropic_dim)
        throw obstruction_error("witness dimension disagrees with the pairing count");
    cert.witness = std::move(witness);
    cert.witness_conductor = wcond;
    return cert;
}

OgrVerdict ogr_fixed_point_exists(const Representation& rep, const Subgroup& a, int k,
                                  const GramForm& gram) {
    if (!gram.nondegenerate)
        throw obstruction_error("isotropic Grassmannian needs a non-degenerate invariant form");
    IsotypicDecomposition dec = restrict_decompose(rep, a);
    OgrVerdict v;
    v.k = k;
    v.certificate = max_invariant_isotropic(dec, gram);
    v.fixed_point_exists = v.certificate.max_isotropic_dim >= k;
    return v;
}

OgrVerdict ogr_fixed_point_exists(const Representation& rep, const Subgroup& a, int k) {
    auto gram = invariant_symmetric_form(rep);
    if (!gram)
        throw obstruction_error("representation carries no invariant symmetric form");
    return ogr_fixed_point_exists(rep, a, k, *gram);
}

FixedLocusReport projective_fixed_locus(const Representation& rep, const Subgroup& a) {
    if (&a.parent() != &rep.group())
        throw obstruction_error("subgroup does not belong to the representation's group");
    unsigned n = rep.conductor();
    unsigned e = a.exponent();
    unsigned target = (e <= 2 || n % e == 0) ? n : std::lcm(n, e);
    std::vector<CycMat> ops;
    ops.reserve(a.order());
    for (std::uint32_t m : a.members()) {
        CycMat op = rep.operator_at(m);
        ops.push_back(target == n ? std::move(op) : op.lift(target));
    }
    FixedLocusReport report;
    report.conductor = target;
    report.decomposition = decompose_abelian_operators(a, ops, target);
    for (const auto& comp : report.decomposition.components) {
        if (comp.dim == 0) continue;
        report.components.push_back({comp.char_values, comp.space, comp.dim - 1});
    }
    return report;
}

HypersurfaceVerdict hypersurface_fixed_point(const Representation& rep, const Subgroup& a,
                                             const CubicForm& cubic) {
    if (cubic.nvars != rep.dim()) throw obstruction_error("cubic arity does not match the action");
    // Invariance up to scalar, checked exactly on the generators.
    std::size_t lead = 0;
    while (lead < cubic.coeffs.size() && cubic.coeffs[lead].is_zero()) ++lead;
    if (lead == cubic.coeffs.size()) throw obstruction_error("cubic is identically zero");
    for (const CycMat& s : rep.generator_images()) {
        CubicForm sub = cubic.substitute(s);
        CycNum scale = sub.coeffs[lead] / cubic.coeffs[lead];
        for (std::size_t t = 0; t < cubic.coeffs.size(); ++t)
            if (sub.coeffs[t] != scale * cubic.coeffs[t])
                throw obstruction_error("cubic is not invariant under the action");
    }

    FixedLocusReport locus = projective_fixed_locus(rep, a);
    CubicForm lifted = cubic.conductor == locus.conductor ? cubic : cubic.lift(locus.conductor);

    HypersurfaceVerdict verdict;
    verdict.conductor = locus.conductor;
    for (const FixedComponent& comp : locus.components) {
        HypersurfaceComponentVerdict cv;
        cv.projective_dim = comp.projective_dim;
        if (comp.projective_dim == 0) {
            const auto& point = comp.space.basis()[0];
            CycNum value = lifted.evaluate(point);
            cv.meets_cubic = value.is_zero();
            cv.detail = cv.meets_cubic ? "fixed point lies on the cubic"
                                       : "fixed point off the cubic (value " + value.str() + ")";
            if (cv.meets_cubic) cv.point = point;
        } else {
            CycMat param = comp.space.basis_matrix().transpose(); // ambient x d
            CubicForm restricted = lifted.substitute(param);
            cv.meets_cubic = true;
            cv.detail = restricted.is_zero()
                            ? "fixed component lies inside the cubic"
                            : "fixed component of projective dim >= 1 meets the cubic over C "
                              "(nonzero cubic on P^d always vanishes somewhere)";
        }
        verdict.components.push_back(std::move(cv));
        verdict.fixed_point_on_cubic = verdict.fixed_point_on_cubic ||
                                       verdict.components.back().meets_cubic;
    }
    return verdict;
}

ObstructionReport ry_obstruction(const RyScenario& scenario) {
    if (!scenario.rep) throw obstruction_error("scenario carries no representation");
    if (scenario.subgroups.size() != scenario.subgroup_labels.size())
        throw obstruction_error("subgroup label count mismatch");
    ObstructionReport report;
    report.group_name = scenario.group_name;

    std::optional<GramForm> gram;
    switch (scenario.kind) {
        case ActionKind::ProjectiveSpace:
            report.action = "projective space P(V)";
            break;
        case ActionKind::IsotropicGrassmannian:
            report.action = "isotropic Grassmannian G_iso(" +
                            std::to_string(scenario.grassmannian_k) + ", V)";
            gram = invariant_symmetric_form(*scenario.rep);
            if (!gram || !gram->nondegenerate)
                throw obstruction_error("no non-degenerate invariant form for the Grassmannian");
            break;
        case ActionKind::InvariantHypersurface:
            report.action = "invariant cubic hypersurface";
            if (!scenario.cubic) throw obstruction_error("scenario carries no cubic");
            break;
    }

    for (std::size_t i = 0; i < scenario.subgroups.size(); ++i) {
        const Subgroup& a = *scenario.subgroups[i];
        if (!a.is_abelian())
            throw obstruction_error("listed subgroup is not abelian: " +
                                    scenario.subgroup_labels[i]);
        RySubgroupVerdict v;
        v.label = scenario.subgroup_labels[i];
        std::ostringstream detail;
        switch (scenario.kind) {
            case ActionKind::ProjectiveSpace: {
                FixedLocusReport locus = projective_fixed_locus(*scenario.rep, a);
                v.fixed_point = !locus.components.empty();
                detail << "fixed locus components of projective dims";
                for (const auto& c : locus.components) detail << " " << c.projective_dim;
                break;
            }
            case ActionKind::IsotropicGrassmannian: {
                OgrVerdict ov =
                    ogr_fixed_point_exists(*scenario.rep, a, scenario.grassmannian_k, *gram);
                v.fixed_point = ov.fixed_point_exists;
                detail << "max invariant isotropic dim " << ov.certificate.max_isotropic_dim
                       << " vs required " << scenario.grassmannian_k;
                break;
            }
            case ActionKind::InvariantHypersurface: {
                HypersurfaceVerdict hv =
                    hypersurface_fixed_point(*scenario.rep, a, *scenario.cubic);
                v.fixed_point = hv.fixed_point_on_cubic;
                detail << hv.components.size() << " fixed components examined";
                break;
            }
        }
        v.detail = detail.str();
        if (!v.fixed_point && report.witness_label.empty()) {
            report.obstructed = true;
            report.witness_label = v.label;
        }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

EdBoundReport ed_bounds(const std::string& group_name, std::vector<EdFact> lower_bounds,
                        std::vector<EdFact> upper_bounds) {
    if (lower_bounds.empty() || upper_bounds.empty())
        throw obstruction_error("essential-dimension ledger needs both bound lists");
    EdBoundReport report;
    report.group_name = group_name;
    report.lower_bounds = std::move(lower_bounds);
    report.upper_bounds = std::move(upper_bounds);
    report.best_lower = 0;
    report.best_upper = INT32_MAX;
    for (const EdFact& f : report.lower_bounds) report.best_lower = std::max(report.best_lower, f.value);
    for (const EdFact& f : report.upper_bounds) report.best_upper = std::min(report.best_upper, f.value);
    if (report.best_lower > report.best_upper)
        throw obstruction_error("inconsistent essential-dimension bounds for " + group_name +
                                ": lower " + std::to_string(report.best_lower) + " > upper " +
                                std::to_string(report.best_upper));
    report.conclusion =
        report.best_lower == report.best_upper
            ? "ed = " + std::to_string(report.best_lower)
            : "ed in [" + std::to_string(report.best_lower) + ", " +
                  std::to_string(report.best_upper) + "]";
    return report;
}

} // namespace edc
