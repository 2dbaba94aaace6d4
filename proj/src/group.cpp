#include "edc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace edc {

FqMat MatrixGroup::canon(FqMat m) const {
    if (!sign_canonical_ || fid_.p == 2) return m;
    unsigned half = (fid_.p - 1) / 2;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            unsigned v = m.at(i, j);
            if (!v) continue;
            return v <= half ? m : -m;
        }
    return m;
}

MatrixGroup MatrixGroup::closure(std::vector<FqMat> generators, std::uint64_t cap,
                                 bool sign_canonical) {
    if (generators.empty()) throw group_error("closure needs at least one generator");
    MatrixGroup g;
    g.fid_ = generators[0].field();
    g.degree_ = generators[0].rows();
    g.sign_canonical_ = sign_canonical;
    for (const FqMat& m : generators) {
        if (m.field() != g.fid_ || m.rows() != g.degree_ || m.cols() != g.degree_)
            throw group_error("generators must share field and degree");
        if (!m.inverse()) throw group_error("generator is singular");
    }
    for (FqMat& m : generators) m = g.canon(std::move(m));
    g.gens_ = std::move(generators);

    g.elems_.push_back(FqMat::identity(g.fid_, g.degree_));
    g.index_.emplace(g.elems_[0].pack(), 0);
    for (std::size_t at = 0; at < g.elems_.size(); ++at) {
        FqMat cur = g.elems_[at]; // copy: elems_ may reallocate below
        for (const FqMat& s : g.gens_) {
            FqMat next = g.canon(cur * s);
            std::uint64_t key = next.pack();
            if (g.index_.contains(key)) continue;
            if (g.elems_.size() >= cap)
                throw group_error("group closure exceeded cap " + std::to_string(cap) +
                                  "; wrong generators or normalization");
            g.index_.emplace(key, static_cast<std::uint32_t>(g.elems_.size()));
            g.elems_.push_back(std::move(next));
        }
    }
    g.index_elements();
    return g;
}

void MatrixGroup::index_elements() {
    gen_idx_.clear();
    for (const FqMat& s : gens_) {
        auto it = index_.find(canon(s).pack());
        if (it == index_.end()) throw group_error("generator missing from closure");
        gen_idx_.push_back(it->second);
    }
}

MatrixGroup MatrixGroup::central_quotient(std::uint64_t cap) const {
    // The scalar subgroup must be {I} or {+-I}.
    for (unsigned c = 2; c < fid_.q(); ++c) {
        FqMat m = FqMat::identity(fid_, degree_);
        for (int i = 0; i < degree_; ++i) m.set(i, i, c);
        bool is_neg_identity = fid_.deg == 1 && c == fid_.p - 1u;
        if (index_of(m) && !is_neg_identity)
            throw group_error("scalar subgroup is larger than {+-I}");
    }
    return closure(gens_, cap, /*sign_canonical=*/true);
}

std::optional<std::uint32_t> MatrixGroup::index_of(const FqMat& m) const {
    if (m.field() != fid_ || m.rows() != degree_ || m.cols() != degree_) return std::nullopt;
    auto it = index_.find(canon(m).pack());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t MatrixGroup::mul(std::uint32_t a, std::uint32_t b) const {
    auto idx = index_of(elems_[a] * elems_[b]);
    if (!idx) throw group_error("product escaped the enumerated group");
    return *idx;
}

std::uint32_t MatrixGroup::inv(std::uint32_t a) const {
    if (inv_table_.empty()) inv_table_.assign(size(), UINT32_MAX);
    if (inv_table_[a] != UINT32_MAX) return inv_table_[a];
    auto m = elems_[a].inverse();
    if (!m) throw group_error("group element is singular");
    auto idx = index_of(*m);
    if (!idx) throw group_error("inverse escaped the enumerated group");
    inv_table_[a] = *idx;
    return *idx;
}

std::uint32_t MatrixGroup::conjugate(std::uint32_t g, std::uint32_t x) const {
    return mul(mul(g, x), inv(g));
}

unsigned MatrixGroup::order_of(std::uint32_t a) const {
    unsigned n = 1;
    std::uint32_t cur = a;
    while (cur != identity_index()) {
        cur = mul(cur, a);
        ++n;
        if (n > size()) throw group_error("order computation ran away");
    }
    return n;
}

const std::vector<std::vector<std::uint32_t>>& MatrixGroup::conjugacy_classes() const {
    if (!classes_.empty() || size() == 0) return classes_;
    class_of_.assign(size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < size(); ++i) {
        if (class_of_[i] != UINT32_MAX) continue;
        std::uint32_t cid = static_cast<std::uint32_t>(classes_.size());
        std::vector<std::uint32_t> orbit{i};
        class_of_[i] = cid;
        for (std::size_t at = 0; at < orbit.size(); ++at) {
            for (std::uint32_t s : gen_idx_) {
                std::uint32_t y = mul(mul(s, orbit[at]), inv(s));
                if (class_of_[y] == UINT32_MAX) {
                    class_of_[y] = cid;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes_.push_back(std::move(orbit));
    }
    return classes_;
}

std::uint32_t MatrixGroup::class_of(std::uint32_t i) const {
    conjugacy_classes();
    return class_of_[i];
}

std::string MatrixGroup::serialize_elements() const {
    std::string out;
    for (const FqMat& m : elems_) {
        out += m.digits();
        out += '\n';
    }
    return out;
}

std::string MatrixGroup::cache_key() const {
    std::ostringstream os;
    os << fid_.str() << "-deg" << degree_ << (sign_canonical_ ? "-mod-center" : "");
    for (const FqMat& m : gens_) os << "-" << m.digits();
    return os.str();
}

std::optional<MatrixGroup> MatrixGroup::from_cached_elements(std::vector<FqMat> generators,
                                                             bool sign_canonical,
                                                             const std::string& lines) {
    if (generators.empty()) return std::nullopt;
    MatrixGroup g;
    g.fid_ = generators[0].field();
    g.degree_ = generators[0].rows();
    g.sign_canonical_ = sign_canonical;
    for (FqMat& m : generators) m = g.canon(std::move(m));
    g.gens_ = std::move(generators);

    std::istringstream in(lines);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            g.elems_.push_back(FqMat::from_digits(g.fid_, g.degree_, g.degree_, line));
        } catch (const field_error&) {
            return std::nullopt;
        }
        std::uint64_t key = g.elems_.back().pack();
        if (g.index_.contains(key)) return std::nullopt;
        g.index_.emplace(key, static_cast<std::uint32_t>(g.elems_.size() - 1));
    }
    if (g.elems_.empty() || !g.elems_[0].is_identity()) return std::nullopt;
    if (!g.verify_closed()) return std::nullopt;
    try {
        g.index_elements();
    } catch (const group_error&) {
        return std::nullopt;
    }
    return g;
}

bool MatrixGroup::verify_closed() const {
    // Replay the deterministic BFS; the cached list must match it exactly.
    std::vector<std::uint32_t> order;
    std::vector<bool> seen(elems_.size(), false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t at = 0; at < order.size(); ++at) {
        for (const FqMat& s : gens_) {
            auto idx = index_of(elems_[order[at]] * s);
            if (!idx) return false;
            if (!seen[*idx]) {
                seen[*idx] = true;
                order.push_back(*idx);
            }
        }
    }
    if (order.size() != elems_.size()) return false;
    for (std::uint32_t i = 0; i < order.size(); ++i)
        if (order[i] != i) return false;
    return true;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const MatrixGroup& parent, std::vector<std::uint32_t> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_[0] != parent.identity_index())
        throw group_error("subgroup must contain the identity");
    for (std::uint32_t a : members_) {
        if (!contains(parent.inv(a))) throw group_error("member set not closed under inverse");
        for (std::uint32_t b : members_)
            if (!contains(parent.mul(a, b)))
                throw group_error("member set not closed under product");
    }
    if (parent.size() % members_.size() != 0)
        throw group_error("subgroup order does not divide group order");
}

Subgroup Subgroup::generated(const MatrixGroup& parent,
                             const std::vector<std::uint32_t>& generators) {
    std::vector<std::uint32_t> members{parent.identity_index()};
    std::vector<bool> seen(parent.size(), false);
    seen[parent.identity_index()] = true;
    for (std::size_t at = 0; at < members.size(); ++at)
        for (std::uint32_t s : generators) {
            std::uint32_t y = parent.mul(members[at], s);
            if (!seen[y]) {
                seen[y] = true;
                members.push_back(y);
            }
        }
    return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::trivial(const MatrixGroup& parent) {
    return Subgroup(parent, {parent.identity_index()});
}

Subgroup Subgroup::whole(const MatrixGroup& parent) {
    std::vector<std::uint32_t> all(parent.size());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(parent, std::move(all));
}

bool Subgroup::contains(std::uint32_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
}

bool Subgroup::is_abelian() const {
    for (std::uint32_t a : members_)
        for (std::uint32_t b : members_) {
            if (b >= a) break;
            if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
        }
    return true;
}

unsigned Subgroup::exponent() const {
    unsigned e = 1;
    for (std::uint32_t a : members_) e = std::lcm(e, parent_->order_of(a));
    return e;
}

std::string Subgroup::iso_type() const {
    if (!is_abelian()) return "nonabelian of order " + std::to_string(order());
    std::size_t n = order();
    if (n == 1) return "trivial";
    std::vector<unsigned> orders;
    orders.reserve(n);
    for (std::uint32_t a : members_) orders.push_back(parent_->order_of(a));

    // For abelian A the counts #{x : x^{p^k} = 1} = p^{s_k} determine the
    // cyclic decomposition of each p-part.
    std::map<unsigned, std::vector<unsigned>> prime_parts; // p -> exponents of factors
    std::size_t rest = n;
    for (unsigned p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<unsigned> s;
        unsigned long long pk = 1;
        while (true) {
            pk *= p;
            std::size_t count = 0;
            for (unsigned o : orders)
                if (pk % o == 0) ++count;
            unsigned lg = 0;
            std::size_t c = count;
            while (c > 1) {
                if (c % p != 0) throw group_error("inconsistent abelian structure counts");
                c /= p;
                ++lg;
            }
            if (!s.empty() && lg == s.back()) break;
            s.push_back(lg);
        }
        // number of factors with exponent >= k is s_k - s_{k-1}
        std::vector<unsigned> ge;
        for (std::size_t k = 0; k < s.size(); ++k) ge.push_back(s[k] - (k ? s[k - 1] : 0));
        for (std::size_t k = 0; k < ge.size(); ++k) {
            unsigned mult = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
            for (unsigned i = 0; i < mult; ++i)
                prime_parts[p].push_back(static_cast<unsigned>(k + 1));
        }
    }
    std::size_t nfactors = 0;
    for (auto& [p, ks] : prime_parts) {
        std::sort(ks.rbegin(), ks.rend());
        nfactors = std::max(nfactors, ks.size());
    }
    std::vector<unsigned long long> invariant(nfactors, 1);
    for (auto& [p, ks] : prime_parts)
        for (std::size_t i = 0; i < ks.size(); ++i) {
            unsigned long long q = 1;
            for (unsigned e = 0; e < ks[i]; ++e) q *= p;
            invariant[i] *= q;
        }
    std::sort(invariant.begin(), invariant.end());
    if (invariant.size() == 1) return "Z/" + std::to_string(invariant[0]);
    bool all_same = std::all_of(invariant.begin(), invariant.end(),
                                [&](unsigned long long d) { return d == invariant[0]; });
    if (all_same) {
        unsigned long long d = invariant[0];
        bool prime = d > 1;
        for (unsigned long long t = 2; t * t <= d; ++t)
            if (d % t == 0) prime = false;
        if (prime) return "(Z/" + std::to_string(d) + ")^" + std::to_string(invariant.size());
    }
    std::string s;
    for (auto d : invariant) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

// ---------------------------------------------------------------------------

Subgroup unipotent_subgroup_sl2(const MatrixGroup& g) {
    if (g.degree() != 2) throw group_error("unipotent subgroup needs a degree-2 group");
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        const FqMat& m = g.element(i);
        if (m.at(0, 0) == 1 && m.at(1, 1) == 1 && m.at(1, 0) == 0)
            members.push_back(i);
    }
    Subgroup n(g, std::move(members));
    if (n.order() != g.field().q())
        throw group_error("unexpected unipotent subgroup order; group is not SL2");
    return n;
}

namespace {

bool commute(const MatrixGroup& g, std::uint32_t a, std::uint32_t b) {
    return g.mul(a, b) == g.mul(b, a);
}

struct EA2Search {
    const MatrixGroup& g;
    unsigned rank;
    const std::vector<std::uint32_t>& involutions;
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> subgroup; // sorted

    bool extend(std::size_t min_pos) {
        if (gens.size() == rank) return true;
        for (std::size_t pos = min_pos; pos < involutions.size(); ++pos) {
            std::uint32_t c = involutions[pos];
            if (std::binary_search(subgroup.begin(), subgroup.end(), c)) continue;
            bool ok = true;
            for (std::uint32_t x : gens)
                if (!commute(g, x, c)) { ok = false; break; }
            if (!ok) continue;
            std::vector<std::uint32_t> doubled = subgroup;
            for (std::uint32_t s : subgroup) doubled.push_back(g.mul(s, c));
            std::sort(doubled.begin(), doubled.end());
            gens.push_back(c);
            std::swap(subgroup, doubled);
            if (extend(pos + 1)) return true;
            std::swap(subgroup, doubled);
            gens.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<ElementaryAbelianWitness> find_elementary_abelian_2(const MatrixGroup& g,
                                                                  unsigned rank) {
    if (rank == 0) return ElementaryAbelianWitness{Subgroup::trivial(g), {}};
    std::vector<std::uint32_t> involutions;
    for (std::uint32_t i = 1; i < g.size(); ++i)
        if (g.mul(i, i) == g.identity_index()) involutions.push_back(i);

    // The first generator can be fixed to one representative per involution
    // conjugacy class: any (Z/2)^rank subgroup is conjugate to one through it.
    std::vector<std::uint32_t> level1;
    for (const auto& cls : g.conjugacy_classes())
        if (cls[0] != g.identity_index() && g.mul(cls[0], cls[0]) == g.identity_index())
            level1.push_back(cls[0]);

    for (std::uint32_t first : level1) {
        EA2Search search{g, rank, involutions,
                         {first},
                         {g.identity_index(), first}};
        std::sort(search.subgroup.begin(), search.subgroup.end());
        if (rank == 1 || search.extend(0))
            return ElementaryAbelianWitness{Subgroup(g, search.subgroup), search.gens};
    }
    return std::nullopt;
}

namespace {

// Bron-Kerbosch with pivoting over the commuting graph on nontrivial
// elements.  A pairwise-commuting set generates an abelian subgroup, which is
// again pairwise-commuting, so maximal cliques are exactly the maximal
// abelian subgroups with the identity removed.
struct CliqueFinder {
    std::size_t nv;
    std::size_t words;
    std::vector<std::uint64_t> adj;
    std::vector<std::vector<std::uint32_t>>& out;

    const std::uint64_t* row(std::size_t v) const { return &adj[v * words]; }
    static bool test(const std::uint64_t* s, std::size_t v) {
        return (s[v >> 6] >> (v & 63)) & 1;
    }
    static void set(std::uint64_t* s, std::size_t v) { s[v >> 6] |= 1ull << (v & 63); }
    static void clear(std::uint64_t* s, std::size_t v) { s[v >> 6] &= ~(1ull << (v & 63)); }
    bool empty(const std::vector<std::uint64_t>& s) const {
        for (std::uint64_t w : s)
            if (w) return false;
        return true;
    }

    void bk(std::vector<std::uint32_t>& r, std::vector<std::uint64_t> p,
            std::vector<std::uint64_t> x) {
        if (empty(p) && empty(x)) {
            out.push_back(r);
            return;
        }
        std::size_t pivot = SIZE_MAX, best = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!test(p.data(), v) && !test(x.data(), v)) continue;
            std::size_t cnt = 0;
            const std::uint64_t* nb = row(v);
            for (std::size_t w = 0; w < words; ++w)
                cnt += static_cast<std::size_t>(__builtin_popcountll(p[w] & nb[w]));
            if (pivot == SIZE_MAX || cnt > best) {
                pivot = v;
                best = cnt;
            }
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (!test(p.data(), v) || (pivot != SIZE_MAX && test(row(pivot), v))) continue;
            std::vector<std::uint64_t> p2(words), x2(words);
            const std::uint64_t* nb = row(v);
            for (std::size_t w = 0; w < words; ++w) {
                p2[w] = p[w] & nb[w];
                x2[w] = x[w] & nb[w];
            }
            r.push_back(static_cast<std::uint32_t>(v));
            bk(r, std::move(p2), std::move(x2));
            r.pop_back();
            clear(p.data(), v);
            set(x.data(), v);
        }
    }
};

} // namespace

std::vector<AbelianClass> abelian_subgroup_census(const MatrixGroup& g) {
    if (g.size() > 100000) throw group_error("census limited to groups of order <= 1e5");
    std::vector<AbelianClass> result;
    if (g.size() == 1) {
        result.push_back({Subgroup::trivial(g), "trivial", 1});
        return result;
    }
    std::size_t nv = g.size() - 1; // vertices = nontrivial elements, shifted by one
    std::size_t words = (nv + 63) / 64;
    std::vector<std::vector<std::uint32_t>> cliques;
    CliqueFinder cf{nv, words, std::vector<std::uint64_t>(nv * words, 0), cliques};
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b)
            if (commute(g, static_cast<std::uint32_t>(a + 1), static_cast<std::uint32_t>(b + 1))) {
                CliqueFinder::set(&cf.adj[a * words], b);
                CliqueFinder::set(&cf.adj[b * words], a);
            }
    std::vector<std::uint64_t> p(words, ~0ull), x(words, 0);
    if (nv % 64) p[words - 1] = (1ull << (nv % 64)) - 1;
    std::vector<std::uint32_t> r;
    cf.bk(r, std::move(p), std::move(x));

    std::vector<std::vector<std::uint32_t>> subgroups;
    for (auto& clq : cliques) {
        std::vector<std::uint32_t> members{g.identity_index()};
        for (std::uint32_t v : clq) members.push_back(v + 1);
        std::sort(members.begin(), members.end());
        subgroups.push_back(std::move(members));
    }
    std::sort(subgroups.begin(), subgroups.end());

    std::map<std::vector<std::uint32_t>, bool> seen;
    for (const auto& members : subgroups) {
        if (seen.contains(members)) continue;
        std::vector<std::uint32_t> least = members;
        std::size_t class_size = 0;
        for (std::uint32_t t = 0; t < g.size(); ++t) {
            std::vector<std::uint32_t> conj;
            conj.reserve(members.size());
            for (std::uint32_t m : members) conj.push_back(g.conjugate(t, m));
            std::sort(conj.begin(), conj.end());
            if (!seen.contains(conj)) {
                seen.emplace(conj, true);
                ++class_size;
                if (conj < least) least = conj;
            }
        }
        Subgroup rep(g, least);
        std::string type = rep.iso_type();
        result.push_back({std::move(rep), std::move(type), class_size});
    }
    std::sort(result.begin(), result.end(), [](const AbelianClass& a, const AbelianClass& b) {
        if (a.representative.order() != b.representative.order())
            return a.representative.order() < b.representative.order();
        return a.representative.members() < b.representative.members();
    });
    return result;
}

std::vector<FqMat> sl2_generators(FieldId fid) {
    if (fid.deg == 1) {
        int p = fid.p;
        return {FqMat::from_values(fid, 2, 2, {1, 1, 0, 1}),
                FqMat::from_values(fid, 2, 2, {0, 1, p - 1, 0})};
    }
    if (fid == F8)
        return {FqMat::from_values(fid, 2, 2, {1, 1, 0, 1}),
                FqMat::from_values(fid, 2, 2, {1, 2, 0, 1}),
                FqMat::from_values(fid, 2, 2, {1, 4, 0, 1}),
                FqMat::from_values(fid, 2, 2, {0, 1, 1, 0})};
    throw group_error("no SL2 generators for " + fid.str());
}

std::vector<FqMat> sp4_f3_generators() {
    // Symplectic form (0 I; -I 0).  Generators: a quadratic unipotent
    // (I b; 0 I) with b = diag(1,0), Levi embeddings diag(g, g^-T) for the
    // two GL2(F3) generators, and the Weyl element (0 I; -I 0).
    return {
        FqMat::from_values(F3, 4, 4, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
        FqMat::from_values(F3, 4, 4, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1}),
        FqMat::from_values(F3, 4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}),
        FqMat::from_values(F3, 4, 4, {0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0}),
    };
}

} // namespace edc
