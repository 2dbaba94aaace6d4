#include <doctest.h>

#include "edc/representation.hpp"
#include "edc/weil.hpp"
#include "test_support.hpp"

using namespace edc;
using edc_test::Rng;

namespace {

const MatrixGroup& sl2_3() {
    static MatrixGroup g = MatrixGroup::closure(sl2_generators(prime_field(3)), 24);
    return g;
}

const MatrixGroup& psl2_3() {
    static MatrixGroup g = sl2_3().central_quotient();
    return g;
}

} // namespace

TEST_CASE("trivial representation certifies") {
    Representation t = Representation::trivial(sl2_3(), 3, 2);
    CHECK(t.certificate().pairs == 24);
    CHECK(character_of(t).dim() == 2);
    CHECK(projective_kernel(t).order() == 24);
    CHECK(representation_kernel(t).order() == 24);
}

TEST_CASE("scalar twists on a non-perfect group are genuine characters") {
    // SL2(F3) has abelianization Z/3, so u -> zeta_3, w -> 1 extends to an
    // honest homomorphism: the closure certifies it instead of failing.
    std::vector<CycMat> images(2, CycMat::identity(3, 1));
    images[0] = CycMat::scalar(3, 1, CycNum::zeta_pow(3, 1));
    Representation chi = Representation::graph_verify(sl2_3(), images, sl2_3().size());
    CHECK(chi.certificate().pairs == 24);
    CHECK(representation_kernel(chi).order() == 8); // kernel = 2.(Z/2)^2
}

TEST_CASE("relation violations surface as identity pairs") {
    // u has order 3 in SL2(F3); sending it to (-1) forces (identity, -1).
    std::vector<CycMat> images(2, CycMat::identity(3, 1));
    images[0] = CycMat::scalar(3, 1, CycNum::from_rat(3, Rat(-1)));
    try {
        Representation::graph_verify(sl2_3(), images, 1u << 20);
        FAIL("expected graph_closure_error");
    } catch (const graph_closure_error& e) {
        CHECK(e.identity_violation);
    }
}

TEST_CASE("weil representation of SL2(F3)") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    CHECK(w.full.dim() == 3);
    CHECK(w.even.dim() == 2);
    CHECK(w.odd.dim() == 1);
    CHECK(w.central_scalar == Rat(-1));
    REQUIRE(w.odd_on_quotient.has_value());
    CHECK(w.odd_on_quotient->certificate().pairs == 12);

    // parity commutes with the image; the split is invariant
    auto neg = sl2_3().index_of(-FqMat::identity(prime_field(3), 2));
    REQUIRE(neg.has_value());
    CycMat rho_neg = w.full.operator_at(*neg);
    Rng rng(0x7777ULL);
    for (int t = 0; t < 20; ++t) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.range(0, 23));
        CycMat op = w.full.operator_at(i);
        CHECK(op * rho_neg == rho_neg * op);
    }
}

TEST_CASE("homomorphism spot checks on random pairs") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    Rng rng(0x2468ULL);
    for (int t = 0; t < 200; ++t) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.range(0, 23));
        std::uint32_t j = static_cast<std::uint32_t>(rng.range(0, 23));
        CHECK(w.full.operator_at(i) * w.full.operator_at(j) ==
              w.full.operator_at(sl2_3().mul(i, j)));
    }
}

TEST_CASE("characters are class functions") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    Character chi = character_of(w.full);
    for (const auto& cls : sl2_3().conjugacy_classes())
        for (std::uint32_t m : cls) CHECK(chi.value(m) == chi.value(cls[0]));
}

TEST_CASE("abelian character tables") {
    // cyclic of order 4 inside SL2(F3), over conductor 12
    std::uint32_t x = 1;
    while (sl2_3().order_of(x) != 4) ++x;
    Subgroup c4 = Subgroup::generated(sl2_3(), {x});
    auto table = abelian_character_table(c4, 12);
    CHECK(table.size() == 4);
    // first row is the trivial character
    for (const auto& v : table[0]) CHECK(v == CycNum::one(12));
    // rows are distinct homomorphisms
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = r + 1; s < 4; ++s) CHECK(table[r] != table[s]);

    // conductor 3 cannot express order-4 characters
    CHECK_THROWS_AS(abelian_character_table(c4, 3), conductor_error);

    // exponent-2 subgroups need no conductor extension
    auto neg = sl2_3().index_of(-FqMat::identity(prime_field(3), 2));
    Subgroup c2 = Subgroup::generated(sl2_3(), {*neg});
    auto table2 = abelian_character_table(c2, 3);
    CHECK(table2.size() == 2);
}

TEST_CASE("restriction to the trivial subgroup is a single full component") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    Subgroup t = Subgroup::trivial(sl2_3());
    IsotypicDecomposition dec = restrict_decompose(w.full, t);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].dim == 3);
    CHECK(dec.components[0].is_trivial_char);
}

TEST_CASE("projector algebra for a nontrivial decomposition") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    std::uint32_t x = 1;
    while (sl2_3().order_of(x) != 4) ++x;
    Subgroup c4 = Subgroup::generated(sl2_3(), {x});
    // lift operators to conductor 12 to express the order-4 characters
    std::vector<CycMat> ops;
    for (std::uint32_t m : c4.members()) ops.push_back(w.full.operator_at(m).lift(12));
    IsotypicDecomposition dec = decompose_abelian_operators(c4, ops, 12);
    CycMat sum(12, 3, 3);
    int dim_total = 0;
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const CycMat& p = dec.components[i].projector;
        CHECK(p * p == p);
        for (std::size_t j = 0; j < dec.components.size(); ++j)
            if (i != j) CHECK((p * dec.components[j].projector).is_zero());
        sum = sum + p;
        dim_total += dec.components[i].dim;
    }
    CHECK(sum.is_identity());
    CHECK(dim_total == 3);
}

TEST_CASE("via_quotient agrees with the quotient representation") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    // odd part of SL2(F3) comes from PSL2(F3) by composition
    Rng rng(0x1357ULL);
    for (int t = 0; t < 50; ++t) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.range(0, 23));
        std::uint32_t j = static_cast<std::uint32_t>(rng.range(0, 23));
        CHECK(w.odd.operator_at(i) * w.odd.operator_at(j) == w.odd.operator_at(sl2_3().mul(i, j)));
    }
    CHECK(w.odd.certificate().provenance == "quotient-composition(graph-closure)");
}

TEST_CASE("invariant symmetric form on small representations") {
    WeilSplit w = weil_sl2(3, sl2_3(), psl2_3());
    // the trivial rep keeps its seed form
    Representation t1 = Representation::trivial(sl2_3(), 3, 1);
    auto f1 = invariant_symmetric_form(t1);
    REQUIRE(f1.has_value());
    CHECK(f1->gram == CycMat::identity(3, 1));
    CHECK(f1->invariant_space_dim == Rat(1));
    CHECK(f1->nondegenerate);

    // the odd Weil part of SL2(F3) is a nontrivial cube-root character, so
    // its symmetric square has no invariants and the indicator vanishes
    Character chi_odd = character_of(w.odd);
    CHECK(inner_product(chi_odd, chi_odd) == Rat(1));
    CHECK(fs_indicator(chi_odd) == 0);
    auto fodd = invariant_symmetric_form(w.odd);
    CHECK(!fodd.has_value());
}

TEST_CASE("fs_indicator rejects reducible characters") {
    Representation t2 = Representation::trivial(sl2_3(), 3, 2);
    CHECK_THROWS_AS(fs_indicator(character_of(t2)), rep_error);
}

TEST_CASE("cubic monomials and substitution") {
    CHECK(cubic_monomials(5).size() == 35);
    CHECK(cubic_monomials(2).size() == 4);

    // f = x0^3, substituted by the swap of two variables, becomes x1^3
    CubicForm f{4, 2, std::vector<CycNum>(4, CycNum::zero(4))};
    f.coeffs[0] = CycNum::one(4); // x0^3
    CycMat swap(4, 2, 2);
    swap.at(0, 1) = CycNum::one(4);
    swap.at(1, 0) = CycNum::one(4);
    CubicForm g = f.substitute(swap);
    CHECK(g.coeffs[3] == CycNum::one(4)); // x1^3
    CHECK(g.coeffs[0].is_zero());

    std::vector<CycNum> pt{CycNum::from_rat(4, Rat(2)), CycNum::from_rat(4, Rat(5))};
    CHECK(f.evaluate(pt) == CycNum::from_rat(4, Rat(8)));
}

TEST_CASE("invariant cubics of the trivial group are all cubics") {
    auto trivial_group = MatrixGroup::closure({FqMat::identity(F3, 1)}, 1);
    Representation r = Representation::trivial(trivial_group, 3, 2);
    auto basis = invariant_cubics(r);
    CHECK(basis.size() == 4); // all binary cubics

    // a scalar action of order 3 on one variable leaves exactly the cubics
    // invariant: dimension 1 in one variable
    auto c3 = edc_test::cyclic_matrix_group(3);
    CycMat img = CycMat::scalar(3, 1, CycNum::zeta_pow(3, 1));
    Representation r3 = Representation::graph_verify(c3, {img}, 3);
    auto basis3 = invariant_cubics(r3);
    CHECK(basis3.size() == 1); // (zeta_3)^3 = 1
}
