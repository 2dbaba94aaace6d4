#include <doctest.h>

#include "edc/obstruction.hpp"
#include "test_support.hpp"

using namespace edc;
using edc_test::Rng;

namespace {

GramForm manual_form(CycMat gram) {
    GramForm f;
    f.nondegenerate = gram.rank() == gram.rows();
    f.gram = std::move(gram);
    f.invariance_certified = true;
    f.invariant_space_dim = Rat(1);
    return f;
}

} // namespace

TEST_CASE("cyc_sqrt recognizes conductor-compatible roots") {
    auto s = cyc_sqrt(CycNum::from_rat(3, Rat(-3)));
    REQUIRE(s.has_value());
    CHECK(*s * *s == CycNum::from_rat(3, Rat(-3)));

    auto s4 = cyc_sqrt(CycNum::from_rat(4, Rat(-1)));
    REQUIRE(s4.has_value());
    CHECK(*s4 * *s4 == CycNum::from_rat(4, Rat(-1)));

    auto s9 = cyc_sqrt(CycNum::from_rat(7, Rat(9, 4)));
    REQUIRE(s9.has_value());
    CHECK(*s9 == CycNum::from_rat(7, Rat(3, 2)));

    auto sz = cyc_sqrt(CycNum::zeta_pow(7, 3));
    REQUIRE(sz.has_value());
    CHECK(*sz * *sz == CycNum::zeta_pow(7, 3));

    auto sm = cyc_sqrt(Rat(-28) * CycNum::zeta_pow(28, 6));
    REQUIRE(sm.has_value());
    CHECK(*sm * *sm == Rat(-28) * CycNum::zeta_pow(28, 6));

    auto s2 = cyc_sqrt(CycNum::from_rat(8, Rat(2)));
    REQUIRE(s2.has_value());
    CHECK(*s2 * *s2 == CycNum::from_rat(8, Rat(2)));

    CHECK(!cyc_sqrt(CycNum::from_rat(3, Rat(5))).has_value()); // sqrt(5) not in Q(zeta_3)
}

TEST_CASE("trivial group on a hyperbolic plane") {
    auto g = edc_test::cyclic_matrix_group(1);
    Representation rep = Representation::trivial(g, 4, 2);
    IsotypicDecomposition dec = restrict_decompose(rep, Subgroup::whole(g));
    CycMat hyp(4, 2, 2);
    hyp.at(0, 1) = CycNum::one(4);
    hyp.at(1, 0) = CycNum::one(4);
    IsotropyCertificate cert = max_invariant_isotropic(dec, manual_form(hyp));
    CHECK(cert.max_isotropic_dim == 1);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->dim() == 1);
    CHECK(cert.witness->contains({CycNum::one(4), CycNum::zero(4)}));
}

TEST_CASE("Z/4 acting with characters i, -i on a hyperbolic plane") {
    Rng rng(0xbeefULL);
    auto inst = edc_test::make_diagonal_instance(4, {1, 3}, rng);
    Subgroup whole = Subgroup::whole(*inst.group);
    IsotypicDecomposition dec = restrict_decompose(inst.rep, whole);
    IsotropyCertificate cert = max_invariant_isotropic(dec, inst.gram);
    CHECK(cert.max_isotropic_dim == 1);
    REQUIRE(cert.witness.has_value());
    // the witness is the character-i eigenline, i.e. a coordinate axis
    CHECK(cert.witness->dim() == 1);
    bool axis0 = cert.witness->contains({CycNum::one(12), CycNum::zero(12)});
    bool axis1 = cert.witness->contains({CycNum::zero(12), CycNum::one(12)});
    CHECK((axis0 || axis1));
    // one pairing class, an inverse pair
    REQUIRE(cert.pairing.size() == 1);
    CHECK(!cert.pairing[0].self_inverse);
}

TEST_CASE("brute-force oracle agreement on dimension <= 6 instances") {
    Rng rng(0xfaceULL);
    struct Spec {
        unsigned m;
        std::vector<unsigned> exps;
    };
    std::vector<Spec> specs = {
        {2, {0, 1}},
        {4, {1, 3}},
        {3, {1, 2, 0}},
        {4, {1, 3, 0, 2}},
        {6, {1, 5, 2, 4}},
        {6, {1, 5, 2, 4, 3}},
        {6, {1, 5, 2, 4, 0, 3}},
        {6, {1, 5, 0, 3, 2, 4}},
    };
    for (const auto& spec : specs) {
        auto inst = edc_test::make_diagonal_instance(spec.m, spec.exps, rng);
        REQUIRE(inst.gram.nondegenerate);
        Subgroup whole = Subgroup::whole(*inst.group);
        IsotypicDecomposition dec = restrict_decompose(inst.rep, whole);
        IsotropyCertificate cert = max_invariant_isotropic(dec, inst.gram);
        CHECK(cert.max_isotropic_dim == edc_test::oracle_max_isotropic(inst));
    }
}

TEST_CASE("ogr verdicts are monotone in k") {
    Rng rng(0x1221ULL);
    auto inst = edc_test::make_diagonal_instance(6, {1, 5, 2, 4, 0, 3}, rng);
    Subgroup whole = Subgroup::whole(*inst.group);
    // feed the manual form through the gram-aware overload
    std::vector<bool> verdicts;
    for (int k = 0; k <= 6; ++k)
        verdicts.push_back(
            ogr_fixed_point_exists(inst.rep, whole, k, inst.gram).fixed_point_exists);
    CHECK(verdicts[0]);
    for (std::size_t k = 1; k < verdicts.size(); ++k)
        CHECK((!verdicts[k] || verdicts[k - 1]));
}

TEST_CASE("projective fixed locus of the trivial subgroup is everything") {
    auto g = edc_test::cyclic_matrix_group(3);
    CycMat img(3, 2, 2);
    img.at(0, 0) = CycNum::zeta_pow(3, 1);
    img.at(1, 1) = CycNum::zeta_pow(3, 2);
    Representation rep = Representation::graph_verify(g, {img}, 3);
    FixedLocusReport locus = projective_fixed_locus(rep, Subgroup::trivial(g));
    REQUIRE(locus.components.size() == 1);
    CHECK(locus.components[0].projective_dim == 1);

    // the whole group fixes exactly the two coordinate points
    FixedLocusReport locus2 = projective_fixed_locus(rep, Subgroup::whole(g));
    CHECK(locus2.components.size() == 2);
    for (const auto& c : locus2.components) CHECK(c.projective_dim == 0);
}

TEST_CASE("conductor lifting in fixed loci") {
    // order-4 scalar action with conductor-3 ambient arithmetic
    auto g = edc_test::cyclic_matrix_group(4);
    CycMat img(3, 2, 2);
    img.at(0, 1) = CycNum::from_rat(3, Rat(-1));
    img.at(1, 0) = CycNum::one(3); // rotation of order 4 over Q(zeta_3)
    Representation rep = Representation::graph_verify(g, {img}, 4);
    CHECK_THROWS_AS(restrict_decompose(rep, Subgroup::whole(g)), conductor_error);
    FixedLocusReport locus = projective_fixed_locus(rep, Subgroup::whole(g));
    CHECK(locus.conductor == 12);
    CHECK(locus.components.size() == 2); // eigenlines for i and -i
}

TEST_CASE("hypersurface fixed points on a toy action") {
    // diag(1, zeta3, zeta3^2) on P^2 with the invariant cubic X0^3: the fixed
    // points are the coordinate points; e0 lies off the cubic, e1 and e2 on it
    auto g = edc_test::cyclic_matrix_group(3);
    CycMat img(3, 3, 3);
    img.at(0, 0) = CycNum::one(3);
    img.at(1, 1) = CycNum::zeta_pow(3, 1);
    img.at(2, 2) = CycNum::zeta_pow(3, 2);
    Representation rep = Representation::graph_verify(g, {img}, 3);
    CubicForm cubic{3, 3, std::vector<CycNum>(cubic_monomials(3).size(), CycNum::zero(3))};
    cubic.coeffs[0] = CycNum::one(3); // X0^3
    HypersurfaceVerdict hv = hypersurface_fixed_point(rep, Subgroup::whole(g), cubic);
    CHECK(hv.fixed_point_on_cubic);
    int off = 0, on = 0;
    for (const auto& cv : hv.components) (cv.meets_cubic ? on : off)++;
    CHECK(on == 2);
    CHECK(off == 1);

    // a non-invariant cubic is rejected
    CubicForm bad = cubic;
    bad.coeffs[1] = CycNum::one(3); // X0^2 X1 breaks invariance
    CHECK_THROWS_AS(hypersurface_fixed_point(rep, Subgroup::whole(g), bad), obstruction_error);
}

TEST_CASE("ry_obstruction on a projective space never obstructs") {
    auto g = edc_test::cyclic_matrix_group(3);
    CycMat img(3, 2, 2);
    img.at(0, 0) = CycNum::zeta_pow(3, 1);
    img.at(1, 1) = CycNum::one(3);
    Representation rep = Representation::graph_verify(g, {img}, 3);
    Subgroup triv = Subgroup::trivial(g);
    RyScenario sc;
    sc.group_name = "Z/3";
    sc.rep = &rep;
    sc.kind = ActionKind::ProjectiveSpace;
    sc.subgroups = {&triv};
    sc.subgroup_labels = {"trivial"};
    ObstructionReport rep_out = ry_obstruction(sc);
    CHECK(!rep_out.obstructed);
    REQUIRE(rep_out.verdicts.size() == 1);
    CHECK(rep_out.verdicts[0].fixed_point);
}

TEST_CASE("ed_bounds ledger arithmetic") {
    EdBoundReport r = ed_bounds("G", {{2, "computed-subgroup", ""}, {3, "cited", ""}},
                                {{4, "computed-projective-rep", ""}, {6, "cited", ""}});
    CHECK(r.best_lower == 3);
    CHECK(r.best_upper == 4);
    CHECK(r.conclusion == "ed in [3, 4]");

    EdBoundReport eq = ed_bounds("H", {{4, "computed-subgroup", ""}}, {{4, "cited", ""}});
    CHECK(eq.conclusion == "ed = 4");

    CHECK_THROWS_AS(ed_bounds("bad", {{5, "cited", ""}}, {{4, "cited", ""}}), obstruction_error);
    CHECK_THROWS_AS(ed_bounds("empty", {}, {{4, "cited", ""}}), obstruction_error);
}
