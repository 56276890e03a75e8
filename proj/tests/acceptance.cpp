// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; the stated time budgets are
// generous and printed for reference.

#include <cordring/cordring.hpp>

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace cordring;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

NcPoly a2(int i, int j) { return NcPoly::generator(i, j, 2); }
NcPoly a3(int i, int j) { return NcPoly::generator(i, j, 3); }

bool suite_ok(const verify::SuiteResult& r, std::string& detail) {
    if (!r.ok()) {
        detail = r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.total);
        if (!r.failures.empty()) detail += " first failure: " + r.failures.front();
    }
    return r.ok();
}

// 1. The ten image polynomials of the trefoil plat kernel generators.
bool criterion_trefoil_table(std::string& detail) {
    Presentation p = hc0_plat(BraidWord(4, {2, 2, 2}));
    NcPoly c2 = NcPoly::constant(2);
    std::vector<NcPoly> expected = {
        c2 - scale(3, a2(1, 2)) + a2(1, 2) * a2(2, 1) * a2(1, 2),
        c2 - scale(3, a2(2, 1)) + a2(2, 1) * a2(1, 2) * a2(2, 1),
        c2 - scale(3, a2(1, 2)) + a2(1, 2) * a2(2, 1) * a2(1, 2),
        c2 - scale(3, a2(2, 1)) + a2(2, 1) * a2(1, 2) * a2(2, 1),
        NcPoly::constant(-2) + a2(1, 2) + a2(1, 2) * a2(2, 1),
        a2(1, 2) - a2(2, 1),
        c2 + a2(1, 2) - scale(4, a2(2, 1) * a2(1, 2)) + a2(2, 1) * a2(1, 2) * a2(2, 1) * a2(1, 2),
        NcPoly::constant(-2) + a2(2, 1) + a2(1, 2) * a2(2, 1),
        a2(2, 1) - a2(1, 2),
        c2 + a2(2, 1) - scale(4, a2(2, 1) * a2(1, 2)) + a2(2, 1) * a2(1, 2) * a2(2, 1) * a2(1, 2),
    };
    if (p.relators.size() != expected.size()) {
        detail = "relator count " + std::to_string(p.relators.size());
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(p.relators[i] == expected[i])) {
            detail = "relator " + std::to_string(i) + " = " + p.relators[i].render();
            return false;
        }
    }
    return true;
}

// 2. Trefoil three ways with the stated ring strings.
bool criterion_trefoil_three_ways(std::string& detail) {
    Presentation plat = hc0_plat(BraidWord(4, {2, 2, 2}));
    std::string plat_ring =
        canonical_ring_string(abelianize(plat), AbelianVars{plat.n}, XConvention::negated);
    if (plat_ring != "Z[x]/(x^2 - x - 2)") {
        detail = "plat ring " + plat_ring;
        return false;
    }
    Presentation diag = hc0_diagram(PdCode::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
    std::string diag_ring =
        canonical_ring_string(abelianize(diag), AbelianVars{diag.n}, XConvention::plain);
    if (diag_ring != "Z[x]/(x^2 + x - 2)") {
        detail = "diagram ring " + diag_ring;
        return false;
    }
    Presentation clo = hc0_closure(BraidWord(2, {1, 1, 1}));
    UnivariateForm uc = univariate_form(abelianize(clo), 1);
    UnivariateForm up = univariate_form(abelianize(plat), 1);
    if (!uc.ok || !up.ok || !unipoly_equal_up_to_sign(uc.poly, up.poly)) {
        detail = "closure ring differs";
        return false;
    }
    return true;
}

bool criterion_two_bridge_sweep(std::string& detail) {
    return suite_ok(verify::two_bridge_sweep_suite(), detail);
}

bool criterion_matrix_identity(std::string& detail) {
    return suite_ok(verify::matrix_identity_suite(), detail);
}

bool criterion_center(std::string& detail) { return suite_ok(verify::center_suite(), detail); }

// 6. The worked psi values.
bool criterion_psi_examples(std::string& detail) {
    NcPoly first = psi(1, 3, FreeWord::parse("x3^-1 x2^-1", 3));
    if (!(first == -a3(1, 3) + a3(1, 2) * a3(2, 3) + a3(1, 3) * a3(3, 2) * a3(2, 3))) {
        detail = "psi(1,3,...) = " + first.render();
        return false;
    }
    NcPoly second = psi(1, 1, FreeWord::parse("x2 x3 x3 x3 x2^-1", 3));
    NcPoly want = NcPoly::constant(2) - a3(1, 3) * a3(3, 1) - a3(1, 2) * a3(2, 3) * a3(3, 1) -
                  a3(1, 3) * a3(3, 2) * a3(2, 1) - a3(1, 2) * a3(2, 3) * a3(3, 2) * a3(2, 1);
    if (!(second == want)) {
        detail = "psi(1,1,...) = " + second.render();
        return false;
    }
    Cord moved = act(BraidWord(3, {1}), Cord{1, 3, FreeWord(3, {})});
    NcPoly third = psi(moved.i, moved.j, moved.w);
    if (!(third == -a3(2, 3) - a3(2, 1) * a3(1, 3))) {
        detail = "psi(s1.g13) = " + third.render();
        return false;
    }
    return true;
}

bool criterion_skein(std::string& detail) { return suite_ok(verify::skein_suite(), detail); }

bool criterion_conjugacy_markov(std::string& detail) {
    verify::SuiteResult c = verify::conjugacy_suite();
    if (!suite_ok(c, detail)) return false;
    return suite_ok(verify::markov_suite(), detail);
}

bool criterion_gcd_lemma(std::string& detail) { return suite_ok(verify::gcd_lemma_suite(), detail); }

bool criterion_burau(std::string& detail) { return suite_ok(verify::burau_suite(), detail); }

// 11. Pretzel rings: P(3,3,2) and the determinant-9 companion realize
// (x-1) p_11 and (x-1) p_5.
bool criterion_pretzel(std::string& detail) {
    struct Case {
        int p, q, r;
        int index;
    };
    for (const Case& c : {Case{3, 3, 2, 11}, Case{3, -3, 2, 5}}) {
        Presentation plat = hc0_plat(pretzel_plat(c.p, c.q, c.r));
        UnivariateForm uf = univariate_form(abelianize(plat), AbelianVars{plat.n}.count());
        UniPoly expected = UniPoly{-1, 1} * p_poly(c.index);
        if (!uf.ok || !unipoly_equal_up_to_sign(uf.poly, expected)) {
            detail = "P(" + std::to_string(c.p) + "," + std::to_string(c.q) + "," +
                     std::to_string(c.r) + ") gave " + (uf.ok ? uf.poly.render() : "no Z[x] form");
            return false;
        }
    }
    // the odd companions are not quotients of Z[x]
    for (const Case& c : {Case{3, 3, 3, 0}, Case{3, 3, -3, 0}}) {
        Presentation plat = hc0_plat(pretzel_plat(c.p, c.q, c.r));
        UnivariateForm uf = univariate_form(abelianize(plat), AbelianVars{plat.n}.count());
        if (uf.ok) {
            detail = "P(3,3," + std::to_string(c.r) + ") unexpectedly univariate";
            return false;
        }
    }
    return true;
}

bool criterion_char_roots(std::string& detail) {
    return suite_ok(verify::char_roots_suite(), detail);
}

// 13. Linearized suite: constant parts vanish, SNF verified on random
// matrices, granny-knot lower bound.
bool criterion_linearized(std::string& detail) {
    const char* codes[] = {
        "X[1,2,2,1]",
        "X[1,2,2,3] X[3,4,4,1]",
        "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
        "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
        "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
    };
    try {
        for (const char* code : codes) lin_presentation(PdCode::parse(code));
    } catch (const InternalError& e) {
        detail = std::string("constant part: ") + e.what();
        return false;
    }
    Rng rng(kDefaultSeed + 7);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = static_cast<int>(rng.range(1, 10)), cols = static_cast<int>(rng.range(1, 10));
        IntMatrix m(rows, cols);
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) m.at(i, j) = BigInt(rng.range(-9, 9));
        SmithForm s = smith_normal_form(m);
        IntMatrix d = s.U * m * s.V;
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) {
                BigInt want = (i == j && i <= static_cast<int>(s.diagonal.size()))
                                  ? s.diagonal[static_cast<std::size_t>(i - 1)]
                                  : BigInt(0);
                if (d.at(i, j) != want) {
                    detail = "SNF mismatch on trial " + std::to_string(trial);
                    return false;
                }
            }
        if (big_abs(s.U.det()) != 1 || big_abs(s.V.det()) != 1) {
            detail = "non-unimodular transform on trial " + std::to_string(trial);
            return false;
        }
        for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
            if (s.diagonal[k + 1] != 0 && (s.diagonal[k] == 0 || s.diagonal[k + 1] % s.diagonal[k] != 0)) {
                detail = "divisibility chain broken on trial " + std::to_string(trial);
                return false;
            }
        }
    }
    AbelianGroupPresentation granny = lin_presentation(braid_to_pd(BraidWord(3, {1, 1, 1, 2, 2, 2})));
    int mg = min_generators(granny);
    if (mg < 3) {
        detail = "granny min generators " + std::to_string(mg);
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }

    std::vector<Criterion> criteria = {
        {1, "trefoil plat image table", criterion_trefoil_table},
        {2, "trefoil by plat, diagram and closure", criterion_trefoil_three_ways},
        {3, "two-bridge sweep", criterion_two_bridge_sweep},
        {4, "matrix identity on 50 random words", criterion_matrix_identity},
        {5, "center kernel and faithfulness", criterion_center},
        {6, "worked psi values", criterion_psi_examples},
        {7, "skein and well-definedness", criterion_skein},
        {8, "conjugacy and Markov invariance", criterion_conjugacy_markov},
        {9, "gcd lemma for odd m <= 31", criterion_gcd_lemma},
        {10, "Burau lemma and vector check", criterion_burau},
        {11, "pretzel rings (slow)", criterion_pretzel},
        {12, "character-variety roots", criterion_char_roots},
        {13, "linearized invariant and SNF", criterion_linearized},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " ("
                  << static_cast<double>(ms) / 1000.0 << "s)";
        if (!ok && !detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
