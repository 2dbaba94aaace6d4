#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edc/representation.hpp"

namespace edc {

struct obstruction_error : rep_error {
    using rep_error::rep_error;
};

/// Pairing class of isotypic components under the invariant form: either a
/// self-inverse character {lambda} (lambda^2 = 1 on the subgroup) or an
/// inverse pair {alpha, alpha^-1}; components are indices into the
/// decomposition, restricted to nonzero dimensions.
struct PairingClass {
    std::vector<std::size_t> component_indices;
    bool self_inverse = false;
    int dim = 0; // dimension of each member component
};

struct IsotropyCertificate {
    std::vector<PairingClass> pairing;
    bool blocks_verified = false; // gram(C_alpha, C_beta) = 0 whenever alpha*beta != 1
    int max_isotropic_dim = 0;
    /// Invariant totally isotropic subspace achieving the maximum, verified
    /// exactly.  Witness coordinates may require adjoining a square root of
    /// -1, in which case witness_conductor = lcm(n, 4).
    std::optional<Subspace> witness;
    unsigned witness_conductor = 1;
};

/// Maximum dimension of a subgroup-invariant totally isotropic subspace:
/// sum of d_alpha over inverse pairs plus floor(d_lambda/2) over self-inverse
/// components, with an explicit witness.
IsotropyCertificate max_invariant_isotropic(const IsotypicDecomposition& dec,
                                            const GramForm& gram);

struct OgrVerdict {
    bool fixed_point_exists = false;
    int k = 0;
    IsotropyCertificate certificate;
};

/// A fixed point of the subgroup on the Grassmannian of isotropic
/// k-subspaces is exactly an invariant isotropic k-subspace.
OgrVerdict ogr_fixed_point_exists(const Representation& rep, const Subgroup& a, int k);
OgrVerdict ogr_fixed_point_exists(const Representation& rep, const Subgroup& a, int k,
                                  const GramForm& gram);

struct FixedComponent {
    std::vector<CycNum> char_values;
    Subspace space;
    int projective_dim = 0;
};

/// Fixed locus of an abelian subgroup on P(V): the disjoint union of the
/// projectivized isotypic components.  When the subgroup exponent does not
/// divide the representation's conductor the operators are re-expressed in
/// Q(zeta_lcm) explicitly; the conductor used is recorded.
struct FixedLocusReport {
    unsigned conductor = 1;
    std::vector<FixedComponent> components;
    IsotypicDecomposition decomposition;
};

FixedLocusReport projective_fixed_locus(const Representation& rep, const Subgroup& a);

struct HypersurfaceComponentVerdict {
    int projective_dim = 0;
    bool meets_cubic = false;
    std::string detail;
    std::optional<std::vector<CycNum>> point; // witness for 0-dimensional components
};

struct HypersurfaceVerdict {
    bool fixed_point_on_cubic = false;
    unsigned conductor = 1;
    std::vector<HypersurfaceComponentVerdict> components;
};

/// Fixed point of the subgroup on the cubic hypersurface: point components
/// are evaluated exactly; a fixed component of projective dimension >= 1
/// always meets the cubic over C (a degree-3 form on P^d, d >= 1, has zeros;
/// if it restricts to zero the component lies inside the cubic).
HypersurfaceVerdict hypersurface_fixed_point(const Representation& rep, const Subgroup& a,
                                             const CubicForm& cubic);

// --- fixed-point criterion for linearizable actions ---------------------------

enum class ActionKind { ProjectiveSpace, IsotropicGrassmannian, InvariantHypersurface };

struct RyScenario {
    std::string group_name;
    const Representation* rep = nullptr;
    ActionKind kind = ActionKind::ProjectiveSpace;
    int grassmannian_k = 0;               // for IsotropicGrassmannian
    const CubicForm* cubic = nullptr;     // for InvariantHypersurface
    std::vector<const Subgroup*> subgroups;
    std::vector<std::string> subgroup_labels;
};

struct RySubgroupVerdict {
    std::string label;
    bool fixed_point = false;
    std::string detail;
};

/// Per-abelian-subgroup fixed-point verdicts; "obstructed" means some listed
/// abelian subgroup has no fixed point, so the action is not linearizable.
/// The converse direction is never claimed.
struct ObstructionReport {
    std::string group_name;
    std::string action;
    bool obstructed = false;
    std::string witness_label; // subgroup with no fixed point, when obstructed
    std::vector<RySubgroupVerdict> verdicts;
};

ObstructionReport ry_obstruction(const RyScenario& scenario);

// --- essential-dimension ledger ----------------------------------------------

struct EdFact {
    int value = 0;
    std::string provenance; // "computed-subgroup", "computed-projective-rep", "cited", ...
    std::string note;
};

struct EdBoundReport {
    std::string group_name;
    std::vector<EdFact> lower_bounds;
    std::vector<EdFact> upper_bounds;
    int best_lower = 0;
    int best_upper = 0;
    std::string conclusion; // "ed = k" or "ed in [a, b]"
};

/// Merges computed and cited bounds; lower > upper is a hard failure.
EdBoundReport ed_bounds(const std::string& group_name, std::vector<EdFact> lower_bounds,
                        std::vector<EdFact> upper_bounds);

/// Square root in Q(zeta_conductor) for the recognizable cases (rationals
/// built from primes dividing the conductor, and rational multiples of roots
/// of unity); the result is verified exactly before being returned.
std::optional<CycNum> cyc_sqrt(const CycNum& d);

} // namespace edc
