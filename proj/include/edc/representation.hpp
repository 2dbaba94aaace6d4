#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edc/cyc_matrix.hpp"
#include "edc/group.hpp"

namespace edc {

struct rep_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a generator-image assignment does not extend to a
/// homomorphism: the pair closure grows past the cap, or a pair
/// (identity, M != I) appears.
struct graph_closure_error : rep_error {
    graph_closure_error(const std::string& what, std::uint64_t pairs, bool identity_violation)
        : rep_error(what), pairs(pairs), identity_violation(identity_violation) {}
    std::uint64_t pairs;
    bool identity_violation;
};

struct ClosureCertificate {
    std::uint64_t pairs = 0;    // (group element, operator) pairs in the closed graph
    std::uint64_t products = 0; // generator products performed during closure
    std::string provenance;     // "graph-closure" or "quotient-composition"
};

/// Certified linear representation of an enumerated group over Q(zeta_n).
/// Construction closes the set of (element, operator) pairs under
/// right-multiplication by the generator pairs; the assignment is accepted
/// only if the closure has exactly |G| pairs projecting bijectively to the
/// group, which makes the pairing the graph of a homomorphism.  Operators are
/// kept as canonical byte encodings and decoded on access.
class Representation {
  public:
    static Representation graph_verify(const MatrixGroup& g, std::vector<CycMat> gen_images,
                                       std::uint64_t cap);
    static Representation trivial(const MatrixGroup& g, unsigned conductor, int dim);
    /// Representation of `cover` factoring through cover -> quotient, where
    /// `quotient` was built by cover.central_quotient() and carries rep.
    static Representation via_quotient(const MatrixGroup& cover, const MatrixGroup& quotient,
                                       const Representation& quotient_rep);

    const MatrixGroup& group() const { return *group_; }
    int dim() const { return dim_; }
    unsigned conductor() const { return conductor_; }
    const ClosureCertificate& certificate() const { return cert_; }
    const std::vector<CycMat>& generator_images() const { return gen_images_; }

    CycMat operator_at(std::uint32_t index) const;
    bool operator_is_identity(std::uint32_t index) const;

    /// Empty placeholder; every usable instance comes from a factory above.
    Representation() = default;

  private:
    const MatrixGroup* group_ = nullptr;
    int dim_ = 0;
    unsigned conductor_ = 1;
    std::vector<CycMat> gen_images_;
    std::vector<std::vector<std::uint8_t>> ops_; // indexed by element index
    ClosureCertificate cert_;
};

/// Character of a representation: trace of each operator, indexed by element.
class Character {
  public:
    Character(const MatrixGroup& g, unsigned conductor, std::vector<CycNum> values)
        : group_(&g), conductor_(conductor), values_(std::move(values)) {}
    const MatrixGroup& group() const { return *group_; }
    unsigned conductor() const { return conductor_; }
    const CycNum& value(std::uint32_t index) const { return values_[index]; }
    int dim() const;

  private:
    const MatrixGroup* group_;
    unsigned conductor_;
    std::vector<CycNum> values_;
};

Character character_of(const Representation& rep);
Character trivial_character(const MatrixGroup& g, unsigned conductor);

/// (1/|G|) sum chi1(g) conj(chi2(g)); exact, must come out rational.
Rat inner_product(const Character& a, const Character& b);
/// Same over a subgroup, with value tables indexed by members() order.
Rat inner_product_over(const Subgroup& a, const std::vector<CycNum>& t1,
                       const std::vector<CycNum>& t2);
std::vector<CycNum> restrict_character(const Character& chi, const Subgroup& a);

/// Frobenius-Schur indicator (1/|G|) sum chi(g^2); requires <chi,chi> = 1.
int fs_indicator(const Character& chi);

/// Multiplicities <Sym^2 chi, triv> and <Sym^3 chi, triv>.
Rat sym2_invariant_multiplicity(const Character& chi);
Rat sym3_invariant_multiplicity(const Character& chi);

struct GramForm {
    CycMat gram;
    bool invariance_certified = false;
    bool nondegenerate = false;
    Rat invariant_space_dim; // dimension of the space of invariant symmetric forms
};

/// Reynolds average of a symmetric seed over the group; nullopt when the
/// invariant-form space has dimension 0.
std::optional<GramForm> invariant_symmetric_form(const Representation& rep);

struct IsotypicComponent {
    std::vector<CycNum> char_values; // on subgroup members, in members() order
    int dim = 0;
    CycMat projector;
    Subspace space;
    bool is_trivial_char = false;
};

struct IsotypicDecomposition {
    const Subgroup* subgroup = nullptr;
    unsigned conductor = 1;
    std::vector<IsotypicComponent> components; // one per character, zero dims included
};

/// Character table of an abelian subgroup, values in Q(zeta_conductor);
/// the subgroup exponent must divide the conductor or be at most 2.
/// Rows are canonically ordered with the trivial character first.
std::vector<std::vector<CycNum>> abelian_character_table(const Subgroup& a, unsigned conductor);

/// Isotypic decomposition of the restriction to an abelian subgroup via the
/// character projectors (1/|A|) sum conj(lambda(a)) rho(a).
IsotypicDecomposition restrict_decompose(const Representation& rep, const Subgroup& a);

/// Same computation on explicitly provided operators (members() order), used
/// when the caller has re-expressed them in a larger conductor.
IsotypicDecomposition decompose_abelian_operators(const Subgroup& a,
                                                  const std::vector<CycMat>& ops,
                                                  unsigned conductor);

/// Elements acting by a scalar matrix (the projective kernel), resp. by the
/// identity (the kernel).
Subgroup projective_kernel(const Representation& rep);
Subgroup representation_kernel(const Representation& rep);

// --- degree-3 invariants ----------------------------------------------------

/// Monomial exponent triples (i <= j <= k) indexing cubic-form coefficients.
const std::vector<std::array<int, 3>>& cubic_monomials(int nvars);

struct CubicForm {
    unsigned conductor = 1;
    int nvars = 0;
    std::vector<CycNum> coeffs; // indexed by cubic_monomials(nvars)

    bool is_zero() const;
    CycNum evaluate(const std::vector<CycNum>& point) const;
    /// The form x -> f(M x).
    CubicForm substitute(const CycMat& m) const;
    CubicForm lift(unsigned bigger_conductor) const;
    /// Scales so the first nonzero coefficient is 1.
    CubicForm normalized() const;
    std::string str() const;
};

/// Basis of the invariant cubic forms, obtained by Reynolds averaging on the
/// monomial coefficient space and cross-checked against <Sym^3 chi, triv>.
std::vector<CubicForm> invariant_cubics(const Representation& rep);

/// zeta_order^k expressed in Q(zeta_conductor); order must divide conductor,
/// except order <= 2 which is rational.
CycNum root_of_unity(unsigned conductor, unsigned order, unsigned k);

} // namespace edc
