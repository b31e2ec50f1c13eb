// End-to-end acceptance run: one line per criterion, [PASS] or [FAIL].
// Exit 0 iff every criterion passes.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace qa;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << "\n"
              << std::flush;
    if (!ok) ++failures;
}

// criterion 1: selfinjective algebras have phi lower bound 0
void criterion1() {
    bool ok = true;
    for (AlgebraRef alg : {fx::loop_x2(), fx::nakayama3()}) {
        K0Context ctx(alg);
        ok = ok && phi_lower_bound(ctx, default_phidim_suite(alg)) == 0;
    }
    report(1, ok, "selfinjective algebras: suite phi lower bound 0");
}

// criteria 2 and 3: the Igusa-Todorov identities and the eta oracle on a
// random corpus (10 algebras, at least 200 module pairs)
void criteria2_3() {
    std::mt19937 rng(20260823);
    bool ok2 = true, ok3 = true;
    int pairs = 0;
    for (int t = 0; t < 10; ++t) {
        AlgebraRef alg = fx::random_algebra(rng);
        K0Context ctx(alg);
        IsoRegistry pd_reg(alg);
        for (int k = 0; k < 20; ++k) {
            Representation m = fx::random_module(alg, rng);
            Representation n = fx::random_module(alg, rng);
            ++pairs;
            int phi_m = phi(ctx, m);

            DimResult pd_m = proj_dim(m, 30, &pd_reg);
            if (pd_m.is_finite() && phi_m != pd_m.value) ok2 = false;
            if (pd_m.is_infinite() && is_indecomposable(m) && phi_m != 0) ok2 = false;
            if (phi_m > phi(ctx, direct_sum(m, n))) ok2 = false;
            if (phi(ctx, direct_sum(m, m)) != phi_m) ok2 = false;
            if (phi_m > phi(ctx, syzygy(m)) + 1) ok2 = false;

            for (const Representation* mm : {&m, &n}) {
                auto gens = generator_classes(ctx, *mm);
                ClosureResult cl = syzygy_class_closure(ctx, gens);
                if (!cl.finite ||
                    phi_of_classes(ctx, gens) !=
                        phi_eta_oracle(ctx, gens, static_cast<int>(cl.classes.size()) + 1))
                    ok3 = false;
            }
        }
    }
    report(2, ok2 && pairs >= 200,
           "Igusa-Todorov identities on " + std::to_string(pairs) + " random pairs");
    report(3, ok3, "phi matches the injectivity-scan oracle on the corpus");
}

struct CpqRun {
    std::string table_json;
    std::string phi_json;
    std::string id_json;
    std::string registry_json;
    bool pass = true;
};

// criteria 4-7 compute everything twice (criterion 11 needs byte equality)
CpqRun run_cpq_block(bool emit_reports) {
    CpqRun out;
    std::vector<Rat> lambdas = {Rat(0), Rat(1), Rat(2)};
    int n_max = 2;

    GluedAlgebra g = build_cpq(2, Rat(2), Rat(3));

    // criterion 4
    Report table = verify_cpq_syzygy_table(g, Rat(2), Rat(3), lambdas, n_max);
    out.table_json = table.dump(2);
    bool ok4 = table["status"] == "pass";
    if (emit_reports) report(4, ok4, "full syzygy table (m=2, p=2, q=3, lambda in {0,1,2}, n<=2)");
    out.pass = out.pass && ok4;

    // criteria 5 and 6 share one class registry
    K0Context ctx(g.c);
    std::vector<Representation> family = cpq_sample_family(g, lambdas, n_max);
    int phi_family = phi_lower_bound(ctx, family);
    bool ok5 = phi_family == 4;
    // no sampled member exceeds 4
    for (const auto& m : family) ok5 = ok5 && phi(ctx, m) <= 4;
    if (emit_reports) report(5, ok5, "sampled family phi = " + std::to_string(phi_family));
    out.pass = out.pass && ok5;

    std::vector<Representation> suite = family;
    Representation cur = simple(g.c, "c1");
    suite.push_back(cur);
    for (int i = 1; i <= 4; ++i) {
        cur = syzygy(cur);
        if (cur.is_zero()) break;
        suite.push_back(cur);
    }
    for (int v = 0; v < g.c->quiver().num_vertices(); ++v) suite.push_back(simple(g.c, v));

    std::set<ClassId> gen_set;
    for (const auto& m : suite)
        for (const auto& [id, c] : ctx.k0_class(m)) gen_set.insert(id);
    std::vector<ClassId> gens(gen_set.begin(), gen_set.end());
    int phi_std = phi_of_classes(ctx, gens);

    // The family/simple suite tops out one step short of the algebra's phi
    // dimension: the quotients of the last chain projective by its two socle
    // branches have the entry simples as exact first syzygies, and their class
    // difference survives exactly five syzygy steps.
    auto [wa, wb] = cpq_witness_pair(g);
    suite.push_back(wa);
    suite.push_back(wb);
    for (const auto& m : {wa, wb})
        for (const auto& [id, c] : ctx.k0_class(m)) gen_set.insert(id);
    std::vector<ClassId> full_gens(gen_set.begin(), gen_set.end());
    int phi_full = phi_of_classes(ctx, full_gens);
    bool ok6 = phi_full == 5;
    for (const auto& m : suite) ok6 = ok6 && phi(ctx, m) <= 5;
    ok6 = ok6 && phi(ctx, direct_sum(wa, wb)) == 5;
    auto witness = phi_rational_witness(ctx, full_gens, 5);
    ok6 = ok6 && witness.has_value();
    Report phi_report = make_report("cpq-phi");
    phi_report["phi_sample_family"] = phi_family;
    phi_report["phi_standard_suite"] = phi_std;
    phi_report["phi_full_suite"] = phi_full;
    if (witness) {
        auto w = Report::array();
        for (size_t j = 0; j < witness->size(); ++j)
            if ((*witness)[j] != 0)
                w.push_back({{"class", full_gens[j]}, {"coefficient", rat_to_string((*witness)[j])}});
        phi_report["witnesses"].push_back(w);
    }
    out.phi_json = phi_report.dump(2);
    if (emit_reports)
        report(6, ok6, "suite phi = " + std::to_string(phi_std) +
                           "; with projective socle quotients phi = " + std::to_string(phi_full) +
                           " and rational witness");
    out.pass = out.pass && ok6;

    // criterion 7: injective dimension asymmetry
    Report id_report = make_report("cpq-id");
    bool ok7 = true;
    for (int m_len : {2, 3, 4}) {
        GluedAlgebra gm = build_cpq(m_len, Rat(2), Rat(3));
        DimResult d = inj_dim(simple(gm.c, "c1"));
        id_report["id_Sc1_m" + std::to_string(m_len)] = d.str();
        ok7 = ok7 && d == DimResult::finite(m_len - 1);
    }
    {
        GluedAlgebra g8 = build_cpq(8, Rat(2), Rat(3));
        AlgebraRef op = g8.c->opposite();
        K0Context opctx(op);
        int phi_op = phi_lower_bound(opctx, default_phidim_suite(op, 8));
        id_report["opposite_suite_phi_m8"] = phi_op;
        ok7 = ok7 && phi_op >= 7;
    }
    out.id_json = id_report.dump(2);
    if (emit_reports) report(7, ok7, "id(S_c1) = m-1 for m in {2,3,4}; opposite suite phi >= 7");
    out.pass = out.pass && ok7;

    out.registry_json = ctx.registry().to_json().dump(2);
    return out;
}

void criterion8() {
    GluedAlgebra g = build_fix5();
    bool ok = true;
    std::string why;
    for (int v = 0; v < g.c->quiver().num_vertices(); ++v) {
        ok = ok && verify_lemma_3_1(g, simple(g.c, v), &why);
        Representation r = radical(indecomposable_projective(g.c, v)).rep;
        if (!r.is_zero()) ok = ok && verify_lemma_3_1(g, r, &why);
    }
    std::mt19937 rng(1618);
    for (int t = 0; t < 20; ++t) ok = ok && verify_lemma_3_1(g, fx::random_module(g.c, rng), &why);
    report(8, ok, "syzygy splitting on the two-block fixture (simples, radicals, 20 random)");
}

void criterion9() {
    GluedAlgebra g = build_fix5();
    bool ok = g.c->dim() == g.a->dim() + g.b->dim() + 2;
    K0Context ctx(g.c);
    Report r = verify_prop_3_5_upper(g, default_phidim_suite(g.c), ctx);
    ok = ok && r["status"] == "pass" && r["bound"] == 6;
    report(9, ok, "two-block fixture: suite phi <= 6 and dim C = dim A + dim B + 2");
}

void criterion10() {
    GluedAlgebra g = build_bm1_example();
    Report r = check_hypotheses(g);
    bool ok = r["H1"] == true && r["H2"] == true && r["H3"] == false;
    // the syzygy orbits of these simples grow without bound, so a clean
    // cutoff diagnostic counts as termination
    K0Context ctx(g.c);
    std::ostringstream phis;
    for (int v = 0; v < g.c->quiver().num_vertices(); ++v) {
        if (v) phis << ", ";
        try {
            phis << phi(ctx, simple(g.c, v), 12);
        } catch (const HorizonExceeded&) {
            phis << "orbit cutoff";
        } catch (const QaError&) {
            ok = false;
        }
    }
    report(10, ok, "doubled 4-cycle: H1, H2 pass, H3 fails; simple phis terminate (" +
                       phis.str() + ")");
}

}  // namespace

int main() {
    try {
        criterion1();
        criteria2_3();
        CpqRun first = run_cpq_block(true);
        criterion8();
        criterion9();
        criterion10();
        CpqRun second = run_cpq_block(false);
        bool ok11 = first.table_json == second.table_json && first.phi_json == second.phi_json &&
                    first.id_json == second.id_json &&
                    first.registry_json == second.registry_json;
        report(11, ok11, "criteria 4-7 reruns are byte-identical (reports and class ids)");
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
