#include "edc/representation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace edc {

namespace {

std::vector<std::uint8_t> encode_mat(const CycMat& m) {
    std::vector<std::uint8_t> out;
    m.encode_into(out);
    return out;
}

} // namespace

Representation Representation::graph_verify(const MatrixGroup& g, std::vector<CycMat> gen_images,
                                            std::uint64_t cap) {
    if (gen_images.size() != g.generators().size())
        throw rep_error("need exactly one image per group generator");
    if (gen_images.empty()) throw rep_error("no generator images");
    unsigned conductor = gen_images[0].conductor();
    int dim = gen_images[0].rows();
    for (const CycMat& m : gen_images) {
        if (m.conductor() != conductor || m.rows() != dim || m.cols() != dim)
            throw rep_error("generator images must share conductor and dimension");
        if (!m.inverse()) throw rep_error("generator image is singular");
    }

    // Close the pair set {(element, operator)} under right multiplication by
    // the generator pairs.  Pairs are bucketed by the group element, so the
    // assignment is a homomorphism graph iff every bucket ends up a singleton.
    std::vector<std::vector<std::vector<std::uint8_t>>> buckets(g.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue; // (element, slot)
    std::uint64_t pairs = 1, products = 0;
    buckets[g.identity_index()].push_back(encode_mat(CycMat::identity(conductor, dim)));
    queue.emplace_back(g.identity_index(), 0);

    for (std::size_t at = 0; at < queue.size(); ++at) {
        auto [ei, slot] = queue[at];
        CycMat m = CycMat::decode(conductor, dim, dim, buckets[ei][slot].data(),
                                  buckets[ei][slot].size());
        for (std::size_t j = 0; j < gen_images.size(); ++j) {
            std::uint32_t e2 = g.mul(ei, g.generator_indices()[j]);
            CycMat m2 = m * gen_images[j];
            ++products;
            std::vector<std::uint8_t> enc = encode_mat(m2);
            auto& bucket = buckets[e2];
            if (std::find(bucket.begin(), bucket.end(), enc) != bucket.end()) continue;
            if (e2 == g.identity_index() && !m2.is_identity())
                throw graph_closure_error(
                    "graph closure found a pair (identity, M) with M != I; "
                    "the assignment has a nontrivial kernel obstruction",
                    pairs + 1, true);
            ++pairs;
            if (pairs > cap)
                throw graph_closure_error(
                    "graph closure exceeded cap " + std::to_string(cap) +
                        " pairs; the assignment does not extend to a homomorphism",
                    pairs, false);
            bucket.push_back(std::move(enc));
            queue.emplace_back(e2, static_cast<std::uint32_t>(bucket.size() - 1));
        }
    }

    if (pairs != g.size())
        throw graph_closure_error("graph closure has " + std::to_string(pairs) + " pairs for " +
                                      std::to_string(g.size()) + " group elements",
                                  pairs, false);
    Representation rep;
    rep.group_ = &g;
    rep.dim_ = dim;
    rep.conductor_ = conductor;
    rep.gen_images_ = std::move(gen_images);
    rep.ops_.resize(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        if (buckets[i].size() != 1)
            throw graph_closure_error("graph closure failed to reach every group element", pairs,
                                      false);
        rep.ops_[i] = std::move(buckets[i][0]);
    }
    rep.cert_ = {pairs, products, "graph-closure"};
    return rep;
}

Representation Representation::trivial(const MatrixGroup& g, unsigned conductor, int dim) {
    std::vector<CycMat> images(g.generators().size(), CycMat::identity(conductor, dim));
    return graph_verify(g, std::move(images), g.size());
}

Representation Representation::via_quotient(const MatrixGroup& cover, const MatrixGroup& quotient,
                                            const Representation& quotient_rep) {
    if (&quotient_rep.group() != &quotient)
        throw rep_error("quotient representation built on a different group");
    Representation rep;
    rep.group_ = &cover;
    rep.dim_ = quotient_rep.dim();
    rep.conductor_ = quotient_rep.conductor();
    rep.ops_.resize(cover.size());
    for (std::uint32_t i = 0; i < cover.size(); ++i) {
        auto qi = quotient.index_of(cover.element(i));
        if (!qi) throw rep_error("cover element has no image in the quotient group");
        rep.ops_[i] = encode_mat(quotient_rep.operator_at(*qi));
    }
    for (const CycMat& m : quotient_rep.generator_images()) rep.gen_images_.push_back(m);
    rep.cert_ = quotient_rep.certificate();
    rep.cert_.provenance = "quotient-composition(" + quotient_rep.certificate().provenance + ")";
    return rep;
}

CycMat Representation::operator_at(std::uint32_t index) const {
    return CycMat::decode(conductor_, dim_, dim_, ops_[index].data(), ops_[index].size());
}

bool Representation::operator_is_identity(std::uint32_t index) const {
    static thread_local std::map<std::pair<unsigned, int>, std::vector<std::uint8_t>> id_cache;
    auto key = std::make_pair(conductor_, dim_);
    auto it = id_cache.find(key);
    if (it == id_cache.end())
        it = id_cache.emplace(key, encode_mat(CycMat::identity(conductor_, dim_))).first;
    return ops_[index] == it->second;
}

int Character::dim() const {
    Rat d = values_[group_->identity_index()].rational_part();
    if (!d.is_integer()) throw rep_error("character of identity is not an integer");
    return static_cast<int>(d.num().get_si());
}

Character character_of(const Representation& rep) {
    std::vector<CycNum> values;
    values.reserve(rep.group().size());
    for (std::uint32_t i = 0; i < rep.group().size(); ++i)
        values.push_back(rep.operator_at(i).trace());
    return Character(rep.group(), rep.conductor(), std::move(values));
}

Character trivial_character(const MatrixGroup& g, unsigned conductor) {
    return Character(g, conductor, std::vector<CycNum>(g.size(), CycNum::one(conductor)));
}

Rat inner_product(const Character& a, const Character& b) {
    if (&a.group() != &b.group()) throw rep_error("characters live on different groups");
    if (a.conductor() != b.conductor()) throw conductor_error("character conductor mismatch");
    CycNum sum = CycNum::zero(a.conductor());
    for (std::uint32_t i = 0; i < a.group().size(); ++i) sum += a.value(i) * b.value(i).conj();
    Rat r = sum.rational_part();
    return r / Rat(static_cast<long>(a.group().size()));
}

Rat inner_product_over(const Subgroup& a, const std::vector<CycNum>& t1,
                       const std::vector<CycNum>& t2) {
    if (t1.size() != a.order() || t2.size() != a.order())
        throw rep_error("value tables do not match the subgroup order");
    CycNum sum = CycNum::zero(t1[0].conductor());
    for (std::size_t i = 0; i < t1.size(); ++i) sum += t1[i] * t2[i].conj();
    return sum.rational_part() / Rat(static_cast<long>(a.order()));
}

std::vector<CycNum> restrict_character(const Character& chi, const Subgroup& a) {
    std::vector<CycNum> values;
    values.reserve(a.order());
    for (std::uint32_t m : a.members()) values.push_back(chi.value(m));
    return values;
}

int fs_indicator(const Character& chi) {
    if (!(inner_product(chi, chi) == Rat(1)))
        throw rep_error("fs_indicator requires an irreducible character");
    const MatrixGroup& g = chi.group();
    CycNum sum = CycNum::zero(chi.conductor());
    for (std::uint32_t i = 0; i < g.size(); ++i) sum += chi.value(g.mul(i, i));
    Rat r = sum.rational_part() / Rat(static_cast<long>(g.size()));
    if (r == Rat(1)) return 1;
    if (r == Rat(-1)) return -1;
    if (r == Rat(0)) return 0;
    throw rep_error("Frobenius-Schur indicator " + r.str() + " outside {-1,0,1}");
}

Rat sym2_invariant_multiplicity(const Character& chi) {
    const MatrixGroup& g = chi.group();
    CycNum sum = CycNum::zero(chi.conductor());
    for (std::uint32_t i = 0; i < g.size(); ++i)
        sum += chi.value(i) * chi.value(i) + chi.value(g.mul(i, i));
    return sum.rational_part() / Rat(2 * static_cast<long>(g.size()));
}

Rat sym3_invariant_multiplicity(const Character& chi) {
    const MatrixGroup& g = chi.group();
    CycNum sum = CycNum::zero(chi.conductor());
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        std::uint32_t i2 = g.mul(i, i);
        std::uint32_t i3 = g.mul(i2, i);
        const CycNum& c1 = chi.value(i);
        sum += c1 * c1 * c1 + Rat(3) * (c1 * chi.value(i2)) + Rat(2) * chi.value(i3);
    }
    return sum.rational_part() / Rat(6 * static_cast<long>(g.size()));
}

std::optional<GramForm> invariant_symmetric_form(const Representation& rep) {
    Character chi = character_of(rep);
    Rat space_dim = sym2_invariant_multiplicity(chi);
    if (!space_dim.is_integer() || space_dim.sign() < 0)
        throw rep_error("invariant symmetric form multiplicity is not a nonnegative integer");
    if (space_dim.is_zero()) return std::nullopt;

    const MatrixGroup& g = rep.group();
    unsigned n = rep.conductor();
    int d = rep.dim();
    // Deterministic retry seeds: identity first, then small symmetric
    // pseudo-random integer matrices.
    std::uint64_t lcg = 0x9e3779b97f4a7c15ull;
    auto next_seed = [&](int attempt) {
        CycMat b(n, d, d);
        if (attempt == 0) return CycMat::identity(n, d);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
                long v = static_cast<long>((lcg >> 33) % 7) - 3;
                b.at(i, j) = CycNum::from_rat(n, Rat(v));
                b.at(j, i) = b.at(i, j);
            }
        return b;
    };

    for (int attempt = 0; attempt <= 10; ++attempt) {
        CycMat b0 = next_seed(attempt);
        CycMat sum(n, d, d);
        for (std::uint32_t i = 0; i < g.size(); ++i) {
            CycMat op = rep.operator_at(i);
            sum = sum + op.transpose() * b0 * op;
        }
        CycMat b = Rat(1, static_cast<long>(g.size())) * sum;
        if (b.is_zero()) continue;
        if (!b.is_symmetric()) throw rep_error("Reynolds average lost symmetry");
        GramForm form;
        form.gram = b;
        form.invariance_certified = true;
        for (const CycMat& s : rep.generator_images())
            if (s.transpose() * b * s != b) form.invariance_certified = false;
        if (!form.invariance_certified)
            throw rep_error("Reynolds average is not invariant (internal error)");
        form.nondegenerate = (b.rank() == d);
        form.invariant_space_dim = space_dim;
        return form;
    }
    throw rep_error("Reynolds averaging returned zero despite positive multiplicity");
}

CycNum root_of_unity(unsigned conductor, unsigned order, unsigned k) {
    k %= order;
    if (conductor % order == 0)
        return CycNum::zeta_pow(conductor, static_cast<long>(k) * (conductor / order));
    if (order == 1) return CycNum::one(conductor);
    if (order == 2) return CycNum::from_rat(conductor, Rat(k ? -1 : 1));
    throw conductor_error("conductor " + std::to_string(conductor) +
                          " cannot express a root of unity of order " + std::to_string(order));
}

std::vector<std::vector<CycNum>> abelian_character_table(const Subgroup& a, unsigned conductor) {
    if (!a.is_abelian()) throw rep_error("character table requested for nonabelian subgroup");
    unsigned e = a.exponent();
    if (e > 2 && conductor % e != 0)
        throw conductor_error("conductor " + std::to_string(conductor) +
                              " cannot express characters of exponent " + std::to_string(e));

    const MatrixGroup& g = a.parent();
    const auto& members = a.members();
    std::map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < members.size(); ++i) pos.emplace(members[i], i);

    // Greedy generating set, largest orders first.
    std::vector<std::uint32_t> gens;
    {
        std::vector<std::uint32_t> by_order(members.begin(), members.end());
        std::stable_sort(by_order.begin(), by_order.end(), [&](std::uint32_t x, std::uint32_t y) {
            return g.order_of(x) > g.order_of(y);
        });
        std::vector<bool> generated(members.size(), false);
        generated[0] = true;
        std::size_t covered = 1;
        for (std::uint32_t cand : by_order) {
            if (covered == members.size()) break;
            if (generated[pos.at(cand)]) continue;
            gens.push_back(cand);
            // extend span
            std::vector<std::uint32_t> frontier;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (generated[i]) frontier.push_back(members[i]);
            for (std::size_t at = 0; at < frontier.size(); ++at) {
                std::uint32_t y = g.mul(frontier[at], cand);
                if (!generated[pos.at(y)]) {
                    generated[pos.at(y)] = true;
                    ++covered;
                    frontier.push_back(y);
                }
            }
        }
    }

    // All value assignments on the generators, filtered by consistency on the
    // whole subgroup.
    std::vector<unsigned> gen_orders;
    for (std::uint32_t x : gens) gen_orders.push_back(g.order_of(x));
    std::vector<std::vector<CycNum>> table;
    std::vector<unsigned> choice(gens.size(), 0);
    while (true) {
        std::vector<CycNum> values(members.size(), CycNum::zero(conductor));
        std::vector<bool> have(members.size(), false);
        values[0] = CycNum::one(conductor);
        have[0] = true;
        std::vector<std::uint32_t> frontier{members[0]};
        bool consistent = true;
        for (std::size_t at = 0; at < frontier.size() && consistent; ++at) {
            for (std::size_t j = 0; j < gens.size() && consistent; ++j) {
                std::uint32_t y = g.mul(frontier[at], gens[j]);
                CycNum v = values[pos.at(frontier[at])] * root_of_unity(conductor, gen_orders[j], choice[j]);
                std::size_t yp = pos.at(y);
                if (!have[yp]) {
                    have[yp] = true;
                    values[yp] = v;
                    frontier.push_back(y);
                } else if (values[yp] != v) {
                    consistent = false;
                }
            }
        }
        if (consistent && std::all_of(have.begin(), have.end(), [](bool b) { return b; }))
            table.push_back(std::move(values));
        // next assignment
        std::size_t j = 0;
        for (; j < gens.size(); ++j) {
            if (++choice[j] < gen_orders[j]) break;
            choice[j] = 0;
        }
        if (j == gens.size()) break;
    }
    if (table.size() != a.order())
        throw rep_error("abelian character table has wrong size (internal error)");
    std::sort(table.begin(), table.end(), [](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = CycNum::cmp(x[i], y[i]);
            if (c) return c > 0; // trivial character (all ones) sorts first
        }
        return false;
    });
    return table;
}

IsotypicDecomposition decompose_abelian_operators(const Subgroup& a,
                                                  const std::vector<CycMat>& ops,
                                                  unsigned conductor) {
    if (ops.size() != a.order()) throw rep_error("need one operator per subgroup member");
    int d = ops[0].rows();
    auto table = abelian_character_table(a, conductor);
    IsotypicDecomposition dec;
    dec.subgroup = &a;
    dec.conductor = conductor;
    Rat inv_order(1, static_cast<long>(a.order()));
    CycMat projector_sum(conductor, d, d);
    int dim_sum = 0;
    for (const auto& lambda : table) {
        CycMat p(conductor, d, d);
        for (std::size_t i = 0; i < ops.size(); ++i) {
            CycNum w = lambda[i].conj();
            if (w.is_zero()) continue;
            p = p + w * ops[i];
        }
        p = inv_order * p;
        Rat tr = p.trace().rational_part();
        if (!tr.is_integer() || tr.sign() < 0)
            throw rep_error("projector trace is not a nonnegative integer");
        IsotypicComponent comp;
        comp.char_values = lambda;
        comp.dim = static_cast<int>(tr.num().get_si());
        comp.is_trivial_char = std::all_of(lambda.begin(), lambda.end(), [&](const CycNum& v) {
            return v == CycNum::one(conductor);
        });
        comp.space = comp.dim > 0 ? image(p) : Subspace::zero(conductor, d);
        if (comp.space.dim() != comp.dim)
            throw rep_error("projector image dimension disagrees with its trace");
        projector_sum = projector_sum + p;
        dim_sum += comp.dim;
        comp.projector = std::move(p);
        dec.components.push_back(std::move(comp));
    }
    if (!projector_sum.is_identity())
        throw rep_error("character projectors do not sum to the identity");
    if (dim_sum != d) throw rep_error("component dimensions do not sum to the dimension");
    return dec;
}

IsotypicDecomposition restrict_decompose(const Representation& rep, const Subgroup& a) {
    if (&a.parent() != &rep.group())
        throw rep_error("subgroup does not belong to the representation's group");
    std::vector<CycMat> ops;
    ops.reserve(a.order());
    for (std::uint32_t m : a.members()) ops.push_back(rep.operator_at(m));
    return decompose_abelian_operators(a, ops, rep.conductor());
}

Subgroup projective_kernel(const Representation& rep) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < rep.group().size(); ++i)
        if (rep.operator_at(i).scalar_value()) members.push_back(i);
    return Subgroup(rep.group(), std::move(members));
}

Subgroup representation_kernel(const Representation& rep) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < rep.group().size(); ++i)
        if (rep.operator_is_identity(i)) members.push_back(i);
    return Subgroup(rep.group(), std::move(members));
}

// --- cubic invariants -------------------------------------------------------

const std::vector<std::array<int, 3>>& cubic_monomials(int nvars) {
    static std::mutex mu;
    static std::map<int, std::vector<std::array<int, 3>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(nvars);
    if (it == cache.end()) {
        std::vector<std::array<int, 3>> list;
        for (int i = 0; i < nvars; ++i)
            for (int j = i; j < nvars; ++j)
                for (int k = j; k < nvars; ++k) list.push_back({i, j, k});
        it = cache.emplace(nvars, std::move(list)).first;
    }
    return it->second;
}

namespace {

std::size_t monomial_index(int nvars, int i, int j, int k) {
    // sorted triple lookup; tables are tiny, linear scan is fine
    int a = i, b = j, c = k;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const auto& list = cubic_monomials(nvars);
    for (std::size_t t = 0; t < list.size(); ++t)
        if (list[t][0] == a && list[t][1] == b && list[t][2] == c) return t;
    throw rep_error("monomial index out of range");
}

} // namespace

bool CubicForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const CycNum& c) { return c.is_zero(); });
}

CycNum CubicForm::evaluate(const std::vector<CycNum>& point) const {
    if (static_cast<int>(point.size()) != nvars) throw rep_error("point has wrong arity");
    CycNum sum = CycNum::zero(conductor);
    const auto& mons = cubic_monomials(nvars);
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        sum += coeffs[t] * point[mons[t][0]] * point[mons[t][1]] * point[mons[t][2]];
    }
    return sum;
}

CubicForm CubicForm::substitute(const CycMat& m) const {
    // f(Mx): M has one row per old variable; the column count is the arity
    // of the substituted form (rectangular M restricts to a subspace).
    if (m.rows() != nvars) throw rep_error("substitution matrix shape");
    if (m.conductor() != conductor) throw conductor_error("substitution conductor mismatch");
    int nv = m.cols();
    CubicForm out{conductor, nv,
                  std::vector<CycNum>(cubic_monomials(nv).size(), CycNum::zero(conductor))};
    const auto& mons = cubic_monomials(nvars);
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        auto [a, b, c] = mons[t];
        for (int i = 0; i < nv; ++i) {
            if (m.at(a, i).is_zero()) continue;
            for (int j = 0; j < nv; ++j) {
                if (m.at(b, j).is_zero()) continue;
                CycNum partial = coeffs[t] * m.at(a, i) * m.at(b, j);
                for (int k = 0; k < nv; ++k) {
                    if (m.at(c, k).is_zero()) continue;
                    out.coeffs[monomial_index(nv, i, j, k)] += partial * m.at(c, k);
                }
            }
        }
    }
    return out;
}

CubicForm CubicForm::lift(unsigned bigger) const {
    CubicForm out{bigger, nvars, {}};
    out.coeffs.reserve(coeffs.size());
    for (const CycNum& c : coeffs) out.coeffs.push_back(c.lift(bigger));
    return out;
}

CubicForm CubicForm::normalized() const {
    for (const CycNum& c : coeffs) {
        if (c.is_zero()) continue;
        CycNum inv = c.inverse();
        CubicForm out{conductor, nvars, {}};
        out.coeffs.reserve(coeffs.size());
        for (const CycNum& x : coeffs) out.coeffs.push_back(inv * x);
        return out;
    }
    return *this;
}

std::string CubicForm::str() const {
    const auto& mons = cubic_monomials(nvars);
    std::string s;
    for (std::size_t t = 0; t < mons.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs[t].str() + ")*";
        s += "X" + std::to_string(mons[t][0]) + "*X" + std::to_string(mons[t][1]) + "*X" +
             std::to_string(mons[t][2]);
    }
    return s.empty() ? "0" : s;
}

std::vector<CubicForm> invariant_cubics(const Representation& rep) {
    if (rep.dim() > 6) throw rep_error("invariant cubics limited to dimension <= 6");
    const MatrixGroup& g = rep.group();
    unsigned n = rep.conductor();
    int d = rep.dim();
    const auto& mons = cubic_monomials(d);

    // Reynolds averaging in two exact stages: over a cyclic subgroup H of
    // maximal element order, then over right-coset representatives.
    std::uint32_t h0 = 0;
    unsigned best = 1;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        unsigned o = g.order_of(i);
        if (o > best) {
            best = o;
            h0 = i;
        }
    }
    std::vector<std::uint32_t> h_members;
    {
        std::uint32_t cur = g.identity_index();
        do {
            h_members.push_back(cur);
            cur = g.mul(cur, h0);
        } while (cur != g.identity_index());
    }
    std::vector<std::uint32_t> coset_reps;
    {
        std::vector<bool> covered(g.size(), false);
        for (std::uint32_t r = 0; r < g.size(); ++r) {
            if (covered[r]) continue;
            coset_reps.push_back(r);
            for (std::uint32_t h : h_members) covered[g.mul(h, r)] = true;
        }
    }
    std::vector<CycMat> h_ops, rep_ops;
    for (std::uint32_t h : h_members) h_ops.push_back(rep.operator_at(h));
    for (std::uint32_t r : coset_reps) rep_ops.push_back(rep.operator_at(r));

    Rat scale(1, static_cast<long>(g.size()));
    std::vector<std::vector<CycNum>> rows;
    for (std::size_t t = 0; t < mons.size(); ++t) {
        CubicForm mono{n, d, std::vector<CycNum>(mons.size(), CycNum::zero(n))};
        mono.coeffs[t] = CycNum::one(n);
        CubicForm stage1{n, d, std::vector<CycNum>(mons.size(), CycNum::zero(n))};
        for (const CycMat& op : h_ops) {
            CubicForm s = mono.substitute(op);
            for (std::size_t u = 0; u < mons.size(); ++u) stage1.coeffs[u] += s.coeffs[u];
        }
        CubicForm total{n, d, std::vector<CycNum>(mons.size(), CycNum::zero(n))};
        for (const CycMat& op : rep_ops) {
            CubicForm s = stage1.substitute(op);
            for (std::size_t u = 0; u < mons.size(); ++u) total.coeffs[u] += s.coeffs[u];
        }
        std::vector<CycNum> row;
        row.reserve(mons.size());
        bool nonzero = false;
        for (std::size_t u = 0; u < mons.size(); ++u) {
            CycNum v = scale * total.coeffs[u];
            nonzero = nonzero || !v.is_zero();
            row.push_back(std::move(v));
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    rref_in_place(rows, n);

    Character chi = character_of(rep);
    Rat mult = sym3_invariant_multiplicity(chi);
    if (!(Rat(static_cast<long>(rows.size())) == mult))
        throw rep_error("Reynolds invariant-cubic dimension " + std::to_string(rows.size()) +
                        " disagrees with character multiplicity " + mult.str());

    std::vector<CubicForm> basis;
    for (auto& row : rows) {
        CubicForm f{n, d, std::move(row)};
        basis.push_back(f.normalized());
    }
    return basis;
}

} // namespace edc
