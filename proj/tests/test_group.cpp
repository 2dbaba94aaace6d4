#include <doctest.h>

#include <set>

#include "edc/group.hpp"

using namespace edc;

TEST_CASE("closure enumerates the classical groups") {
    auto sl2_3 = MatrixGroup::closure(sl2_generators(prime_field(3)), 100);
    CHECK(sl2_3.size() == 24);
    auto sl2_8 = MatrixGroup::closure(sl2_generators(F8), 1000);
    CHECK(sl2_8.size() == 504);
    auto sl2_11 = MatrixGroup::closure(sl2_generators(prime_field(11)), 2000);
    CHECK(sl2_11.size() == 1320);
}

TEST_CASE("closure cap triggers on wrong caps") {
    CHECK_THROWS_AS(MatrixGroup::closure(sl2_generators(F8), 100), group_error);
}

TEST_CASE("closure is deterministic") {
    auto a = MatrixGroup::closure(sl2_generators(F8), 504);
    auto b = MatrixGroup::closure(sl2_generators(F8), 504);
    CHECK(a.serialize_elements() == b.serialize_elements());
}

TEST_CASE("central quotients") {
    auto sl2_11 = MatrixGroup::closure(sl2_generators(prime_field(11)), 1320);
    auto psl2_11 = sl2_11.central_quotient();
    CHECK(psl2_11.size() == 660);

    auto sl2_8 = MatrixGroup::closure(sl2_generators(F8), 504);
    CHECK(sl2_8.central_quotient().size() == 504); // -I = I in characteristic 2

    // a group with a scalar subgroup bigger than {+-I} is rejected
    auto scalars = MatrixGroup::closure({FqMat::from_values(F11, 1, 1, {3})}, 10);
    CHECK(scalars.size() == 5);
    CHECK_THROWS_AS(scalars.central_quotient(), group_error);
}

TEST_CASE("group oracles: multiplication, inverse, order, classes") {
    auto g = MatrixGroup::closure(sl2_generators(prime_field(3)), 24);
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        CHECK(g.mul(i, g.inv(i)) == g.identity_index());
        unsigned o = g.order_of(i);
        CHECK(24 % o == 0);
    }
    // class equation for SL2(F3): 1 + 1 + 4 + 4 + 4 + 4 + 6
    std::multiset<std::size_t> sizes;
    for (const auto& cls : g.conjugacy_classes()) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 4, 4, 4, 4, 6});
}

TEST_CASE("unipotent subgroups of SL2") {
    auto sl2_8 = MatrixGroup::closure(sl2_generators(F8), 504);
    Subgroup n8 = unipotent_subgroup_sl2(sl2_8);
    CHECK(n8.order() == 8);
    CHECK(n8.iso_type() == "(Z/2)^3");

    auto sl2_11 = MatrixGroup::closure(sl2_generators(prime_field(11)), 1320);
    Subgroup n11 = unipotent_subgroup_sl2(sl2_11);
    CHECK(n11.order() == 11);
    CHECK(n11.iso_type() == "Z/11");

    auto sl2_3 = MatrixGroup::closure(sl2_generators(prime_field(3)), 24);
    CHECK(unipotent_subgroup_sl2(sl2_3).order() == 3);
}

TEST_CASE("subgroup validation") {
    auto g = MatrixGroup::closure(sl2_generators(prime_field(3)), 24);
    // a non-closed member set is rejected
    std::uint32_t x = 1;
    while (g.order_of(x) != 4) ++x;
    CHECK_THROWS_AS(Subgroup(g, {g.identity_index(), x}), group_error);
    CHECK(Subgroup::generated(g, {x}).order() == 4);
}

TEST_CASE("elementary abelian search with brute-force cross-check") {
    auto sl2_11 = MatrixGroup::closure(sl2_generators(prime_field(11)), 1320);
    auto psl2 = sl2_11.central_quotient();

    auto r0 = find_elementary_abelian_2(psl2, 0);
    REQUIRE(r0.has_value());
    CHECK(r0->subgroup.order() == 1);

    auto r2 = find_elementary_abelian_2(psl2, 2);
    REQUIRE(r2.has_value());
    CHECK(r2->subgroup.order() == 4);
    CHECK(r2->subgroup.iso_type() == "(Z/2)^2");
    CHECK(r2->generators.size() == 2);

    auto r3 = find_elementary_abelian_2(psl2, 3);
    CHECK(!r3.has_value());

    // oracle: enumerate all involution triples directly
    std::vector<std::uint32_t> invs;
    for (std::uint32_t i = 1; i < psl2.size(); ++i)
        if (psl2.mul(i, i) == psl2.identity_index()) invs.push_back(i);
    bool found_triple = false;
    for (std::size_t a = 0; a < invs.size() && !found_triple; ++a)
        for (std::size_t b = a + 1; b < invs.size() && !found_triple; ++b) {
            if (psl2.mul(invs[a], invs[b]) != psl2.mul(invs[b], invs[a])) continue;
            std::uint32_t ab = psl2.mul(invs[a], invs[b]);
            for (std::size_t c = b + 1; c < invs.size() && !found_triple; ++c) {
                if (invs[c] == ab) continue;
                if (psl2.mul(invs[a], invs[c]) != psl2.mul(invs[c], invs[a])) continue;
                if (psl2.mul(invs[b], invs[c]) != psl2.mul(invs[c], invs[b])) continue;
                found_triple = true;
            }
        }
    CHECK(found_triple == r3.has_value());
}

TEST_CASE("abelian census") {
    // the whole group, when abelian, is its own unique class
    auto klein = MatrixGroup::closure({FqMat::from_values(F3, 2, 2, {2, 0, 0, 1}),
                                       FqMat::from_values(F3, 2, 2, {1, 0, 0, 2})},
                                      4);
    CHECK(klein.size() == 4);
    auto klein_census = abelian_subgroup_census(klein);
    REQUIRE(klein_census.size() == 1);
    CHECK(klein_census[0].iso_type == "(Z/2)^2");
    CHECK(klein_census[0].representative.order() == 4);

    auto sl2_8 = MatrixGroup::closure(sl2_generators(F8), 504);
    auto census8 = abelian_subgroup_census(sl2_8);
    bool has_23 = false;
    for (const auto& c : census8) has_23 = has_23 || c.iso_type == "(Z/2)^3";
    CHECK(has_23);

    auto sl2_11 = MatrixGroup::closure(sl2_generators(prime_field(11)), 1320);
    auto census11 = abelian_subgroup_census(sl2_11.central_quotient());
    std::multiset<std::string> types;
    std::size_t conjugates = 0;
    for (const auto& c : census11) {
        types.insert(c.iso_type);
        conjugates += c.class_size;
    }
    CHECK(types == std::multiset<std::string>{"(Z/2)^2", "Z/11", "Z/5", "Z/6"});
    CHECK(conjugates == 55 + 66 + 55 + 12);
}

TEST_CASE("element cache round trip and corruption handling") {
    auto g = MatrixGroup::closure(sl2_generators(prime_field(3)), 24);
    std::string lines = g.serialize_elements();
    auto back = MatrixGroup::from_cached_elements(sl2_generators(prime_field(3)), false, lines);
    REQUIRE(back.has_value());
    CHECK(back->serialize_elements() == lines);
    CHECK(back->size() == 24);

    // truncation, garbage, and reordering are all rejected
    CHECK(!MatrixGroup::from_cached_elements(sl2_generators(prime_field(3)), false,
                                             lines.substr(0, lines.size() / 2))
               .has_value());
    std::string garbage = lines;
    garbage[6] = '9';
    CHECK(!MatrixGroup::from_cached_elements(sl2_generators(prime_field(3)), false, garbage)
               .has_value());
    std::string swapped = lines;
    std::swap(swapped[5 * 0 + 0], swapped[5 * 23 + 0]); // swap first digits of two lines
    CHECK(!MatrixGroup::from_cached_elements(sl2_generators(prime_field(3)), false, swapped)
               .has_value());
}

TEST_CASE("sp4 generators lie in the symplectic group") {
    // M^T J M = J for J = (0 I; -I 0)
    FqMat j(F3, 4, 4);
    j = FqMat::from_values(F3, 4, 4, {0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 2, 0, 0});
    for (const FqMat& m : sp4_f3_generators()) CHECK(m.transpose() * j * m == j);
}
