#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edc/fq_matrix.hpp"

namespace edc {

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fully enumerated finite matrix group over a finite field.  Elements are
/// listed in deterministic breadth-first order from the identity, so two
/// closures over the same generators produce identical indexing.  When
/// sign_canonical is set the group law is the central quotient by {+-I}:
/// every element is stored as the coset representative whose first nonzero
/// entry lies in {1, ..., (p-1)/2} and products are canonicalized.
class MatrixGroup {
  public:
    static MatrixGroup closure(std::vector<FqMat> generators, std::uint64_t cap,
                               bool sign_canonical = false);

    /// Quotient by the scalar subgroup, which must be {I} or {+-I}.
    MatrixGroup central_quotient(std::uint64_t cap = 1u << 20) const;

    FieldId field() const { return fid_; }
    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    bool sign_canonical() const { return sign_canonical_; }

    const std::vector<FqMat>& generators() const { return gens_; }
    const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

    const FqMat& element(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t identity_index() const { return 0; }
    std::optional<std::uint32_t> index_of(const FqMat& m) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const; // g x g^-1
    unsigned order_of(std::uint32_t a) const;

    /// Conjugacy classes as index lists, deterministic order (by least member).
    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;
    std::uint32_t class_of(std::uint32_t i) const;

    /// Element list as lines of base-q digit strings in BFS order.
    std::string serialize_elements() const;
    std::string cache_key() const;

    /// Rebuilds a group from a cached element list; returns nullopt (cache
    /// miss/corruption) if the data is not the closure of these generators.
    static std::optional<MatrixGroup> from_cached_elements(std::vector<FqMat> generators,
                                                           bool sign_canonical,
                                                           const std::string& lines);

  private:
    MatrixGroup() : fid_{0, 1, 0} {}
    FqMat canon(FqMat m) const;
    void index_elements();
    bool verify_closed() const;

    FieldId fid_;
    int degree_ = 0;
    bool sign_canonical_ = false;
    std::vector<FqMat> gens_;
    std::vector<std::uint32_t> gen_idx_;
    std::vector<FqMat> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    mutable std::vector<std::uint32_t> inv_table_;
    mutable std::vector<std::vector<std::uint32_t>> classes_;
    mutable std::vector<std::uint32_t> class_of_;
};

/// Subgroup given by a sorted member index set; closure under product and
/// inverse plus the Lagrange divisibility are verified at construction.
class Subgroup {
  public:
    Subgroup(const MatrixGroup& parent, std::vector<std::uint32_t> members);
    static Subgroup generated(const MatrixGroup& parent,
                              const std::vector<std::uint32_t>& generators);
    static Subgroup trivial(const MatrixGroup& parent);
    static Subgroup whole(const MatrixGroup& parent);

    const MatrixGroup& parent() const { return *parent_; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(std::uint32_t idx) const;

    bool is_abelian() const;
    unsigned exponent() const;
    /// "Z/n", "(Z/p)^r", or a generic invariant-factor tag like "Z/2 x Z/4".
    std::string iso_type() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

  private:
    const MatrixGroup* parent_;
    std::vector<std::uint32_t> members_;
};

/// The subgroup of upper unitriangular matrices of a group built as SL_2(F_q).
Subgroup unipotent_subgroup_sl2(const MatrixGroup& g);

struct ElementaryAbelianWitness {
    Subgroup subgroup;
    std::vector<std::uint32_t> generators;
};

/// Searches for a subgroup isomorphic to (Z/2)^r by exhaustive backtracking
/// over commuting involutions; nullopt certifies that none exists.
std::optional<ElementaryAbelianWitness> find_elementary_abelian_2(const MatrixGroup& g,
                                                                  unsigned rank);

struct AbelianClass {
    Subgroup representative;
    std::string iso_type;
    std::size_t class_size = 0; // number of conjugates
};

/// Conjugacy-class representatives of all maximal abelian subgroups.
std::vector<AbelianClass> abelian_subgroup_census(const MatrixGroup& g);

// Named constructions used throughout: generators only; callers run closure.
std::vector<FqMat> sl2_generators(FieldId fid);
std::vector<FqMat> sp4_f3_generators();

} // namespace edc
