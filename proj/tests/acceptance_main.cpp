// Acceptance suite: runs every verification criterion end to end against the
// library, printing one PASS/FAIL line per criterion.  All checks are exact.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "edc/obstruction.hpp"
#include "edc/scenarios.hpp"
#include "test_support.hpp"

using namespace edc;

namespace {

struct Harness {
    Workspace& ws;
    int failures = 0;

    void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << "\n";
        if (!ok && !detail.empty()) std::cout << "     " << detail << "\n";
        if (!ok) ++failures;
        std::cout.flush();
    }

    bool scenario_passes(const std::string& name, std::string& detail) {
        ScenarioReport r = run_scenario(name, ws);
        if (r.status == "pass") return true;
        std::ostringstream os;
        os << "scenario " << name << " status " << r.status;
        if (!r.error_message.empty()) os << ": " << r.error_message;
        for (const Check& c : r.checks)
            if (!c.ok)
                os << "\n     check '" << c.label << "': expected " << c.expected << ", computed "
                   << c.computed;
        detail = os.str();
        return false;
    }
};

bool spot_check_representation(const Representation& rep, edc_test::Rng& rng, int pairs,
                               std::string& detail) {
    const MatrixGroup& g = rep.group();
    for (int t = 0; t < pairs; ++t) {
        auto i = static_cast<std::uint32_t>(rng.range(0, static_cast<long>(g.size()) - 1));
        auto j = static_cast<std::uint32_t>(rng.range(0, static_cast<long>(g.size()) - 1));
        if (rep.operator_at(i) * rep.operator_at(j) != rep.operator_at(g.mul(i, j))) {
            detail = "operator product mismatch at pair " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool projector_algebra(const IsotypicDecomposition& dec, std::string& detail) {
    int d = dec.components.front().projector.rows();
    CycMat sum(dec.conductor, d, d);
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const CycMat& p = dec.components[i].projector;
        if (p * p != p) {
            detail = "projector " + std::to_string(i) + " is not idempotent";
            return false;
        }
        for (std::size_t j = 0; j < dec.components.size(); ++j) {
            if (i == j) continue;
            if (!(p * dec.components[j].projector).is_zero()) {
                detail = "projectors " + std::to_string(i) + "," + std::to_string(j) +
                         " are not orthogonal";
                return false;
            }
        }
        sum = sum + p;
    }
    if (!sum.is_identity()) {
        detail = "projectors do not sum to the identity";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cache_dir;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cache" && i + 1 < argc) cache_dir = argv[++i];
    }
    Workspace ws(cache_dir);
    Harness h{ws};

    h.criterion(1, "group orders by full enumeration", [&](std::string& detail) {
        struct Expect {
            const char* name;
            std::size_t order;
        };
        for (Expect e : {Expect{"sl2_f8", 504}, Expect{"sp4_f3", 51840}, Expect{"psp4_f3", 25920},
                         Expect{"sl2_f11", 1320}, Expect{"psl2_f11", 660}}) {
            std::size_t got = ws.group(e.name).size();
            if (got != e.order) {
                detail = std::string(e.name) + " has order " + std::to_string(got) +
                         ", expected " + std::to_string(e.order);
                return false;
            }
        }
        return true;
    });

    h.criterion(2, "psp4-weil: certified Weil representation, split 5+4, central action, "
                   "faithfulness on W+",
                [&](std::string& d) { return h.scenario_passes("psp4-weil", d); });

    h.criterion(3, "psp4-ed: (Z/2)^4 witness, projective kernel {+-I}, ed = 4",
                [&](std::string& d) { return h.scenario_passes("psp4-ed", d); });

    h.criterion(4, "sl28-principal-series: dim 9, irreducible, chi(n) = 1, indicator +1, "
                   "unique invariant form",
                [&](std::string& d) { return h.scenario_passes("sl28-principal-series", d); });

    h.criterion(5, "sl28-ogr-obstruction: multiplicities, orthogonal blocks, max isotropic 1, "
                   "no fixed point on G_iso(4,U), obstructed",
                [&](std::string& d) { return h.scenario_passes("sl28-ogr-obstruction", d); });

    h.criterion(6, "psl211-weil: odd part has dim 5, -I acts trivially, certified over PSL2(F11)",
                [&](std::string& d) { return h.scenario_passes("psl211-weil", d); });

    h.criterion(7, "psl211-census: maximal abelian types cyclic + (Z/2)^2, no (Z/2)^3",
                [&](std::string& d) { return h.scenario_passes("psl211-census", d); });

    h.criterion(8, "psl211-klein-fixed-points: unique invariant cubic, 2-Sylow locus (1,0,0,0), "
                   "fixed points for every abelian class",
                [&](std::string& d) { return h.scenario_passes("psl211-klein-fixed-points", d); });

    h.criterion(9, "ed-ledger: PSp4(F3) = 4, SL2(F8) in [4,6], PSL2(F11) in [3,4], cited constants",
                [&](std::string& d) { return h.scenario_passes("ed-ledger", d); });

    h.criterion(10, "property suites: projector algebra, Reynolds invariance, homomorphism "
                    "spot checks, gauss sums, isotropy oracle",
                [&](std::string& detail) {
        // gauss_sum(p)^2 = (-1)^((p-1)/2) p, exact, p in {3, 7, 11}
        for (unsigned p : {3u, 7u, 11u}) {
            CycNum g = gauss_sum(p);
            if (g * g != CycNum::from_rat(p, Rat(p % 4 == 1 ? long(p) : -long(p)))) {
                detail = "gauss sum square failed for p = " + std::to_string(p);
                return false;
            }
        }

        // projector algebra on the two decompositions the arguments rely on
        IsotypicDecomposition dec_u =
            restrict_decompose(ws.principal_series_u().rep, ws.sl28_unipotent());
        if (!projector_algebra(dec_u, detail)) return false;
        FixedLocusReport sylow_locus = projective_fixed_locus(
            *ws.weil_sl2_11().odd_on_quotient, ws.psl211_two_sylow());
        if (!projector_algebra(sylow_locus.decomposition, detail)) return false;

        // Reynolds output is invariant under the whole group, spot checked
        const GramForm& gram = ws.principal_gram();
        edc_test::Rng rng(0xacce97edULL);
        const Representation& u = ws.principal_series_u().rep;
        for (int t = 0; t < 50; ++t) {
            auto i = static_cast<std::uint32_t>(rng.range(0, 503));
            CycMat op = u.operator_at(i);
            if (op.transpose() * gram.gram * op != gram.gram) {
                detail = "Reynolds form not invariant at element " + std::to_string(i);
                return false;
            }
        }

        // homomorphism certificates, 200 random pairs per representation
        const WeilSplit& wsp4 = ws.weil_sp4();
        const WeilSplit& w11 = ws.weil_sl2_11();
        for (const Representation* rep :
             {&wsp4.full, &wsp4.even, &wsp4.odd, &*wsp4.even_on_quotient, &u, &w11.full,
              &*w11.odd_on_quotient})
            if (!spot_check_representation(*rep, rng, 200, detail)) return false;

        // brute-force isotropy oracle on diagonal instances of dimension <= 6
        edc_test::Rng orng(0x0bacce55ULL);
        std::vector<std::pair<unsigned, std::vector<unsigned>>> specs = {
            {2, {0, 1}},          {4, {1, 3}},
            {3, {1, 2, 0}},       {4, {1, 3, 0, 2}},
            {6, {1, 5, 2, 4}},    {6, {1, 5, 2, 4, 3}},
            {6, {1, 5, 2, 4, 0, 3}}, {6, {1, 5, 0, 3, 2, 4}},
        };
        for (const auto& [m, exps] : specs) {
            auto inst = edc_test::make_diagonal_instance(m, exps, orng);
            Subgroup whole = Subgroup::whole(*inst.group);
            IsotypicDecomposition dec = restrict_decompose(inst.rep, whole);
            IsotropyCertificate cert = max_invariant_isotropic(dec, inst.gram);
            if (cert.max_isotropic_dim != edc_test::oracle_max_isotropic(inst)) {
                detail = "oracle disagreement on instance of dimension " +
                         std::to_string(exps.size());
                return false;
            }
        }
        return true;
    });

    std::cout << (h.failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(h.failures) +
                                        " criterion(s) failed")
              << std::endl;
    return h.failures == 0 ? 0 : 1;
}
