#pragma once

#include "abelian.hpp"
#include "braid.hpp"
#include "cords.hpp"
#include "invariants.hpp"
#include "linearized.hpp"
#include "phirep.hpp"
#include "ringforms.hpp"
#include "rng.hpp"
#include "twobridge.hpp"

#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace cordring::verify {

struct SuiteResult {
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    int passed = 0;
    int total = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == total; }
    void check(bool cond, const std::string& what) {
        ++total;
        if (cond)
            ++passed;
        else
            failures.push_back(what);
    }
};

inline BraidWord random_word(Rng& rng, int strands, int min_len, int max_len) {
    std::vector<int> letters;
    int len = static_cast<int>(rng.range(min_len, max_len));
    for (int i = 0; i < len; ++i) {
        int k = static_cast<int>(rng.range(1, strands - 1));
        letters.push_back(rng.coin() ? k : -k);
    }
    return BraidWord(strands, std::move(letters));
}

inline FreeWord random_free_word(Rng& rng, int rank, int max_len) {
    std::vector<FreeWord::Letter> letters;
    int len = static_cast<int>(rng.range(0, max_len));
    for (int i = 0; i < len; ++i)
        letters.push_back({static_cast<int>(rng.range(1, rank)), rng.coin() ? 1 : -1});
    return FreeWord(rank, std::move(letters));
}

/// 50 seeded random words in B_3 and B_4 of length <= 6:
/// (phi_B(a_ij)) = Phi^L A Phi^R entrywise.
inline SuiteResult matrix_identity_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"matrix-identity"};
    Rng rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
        int n = (trial % 2 == 0) ? 3 : 4;
        BraidWord w = random_word(rng, n, 0, 6);
        r.check(check_matrix_identity(w), "word " + w.render() + " in B_" + std::to_string(n));
    }
    return r;
}

/// phi kills the center (full twist) for n = 2, 3, 4; phi_ext does not for
/// n = 2, 3.
inline SuiteResult center_suite() {
    SuiteResult r{"center"};
    auto full_twist = [](int n) {
        std::vector<int> letters;
        for (int rep = 0; rep < n; ++rep)
            for (int k = 1; k < n; ++k) letters.push_back(k);
        return BraidWord(n, std::move(letters));
    };
    for (int n = 2; n <= 4; ++n)
        r.check(phi(full_twist(n)).is_identity(), "phi(full twist) != id in B_" + std::to_string(n));
    for (int n = 2; n <= 3; ++n)
        r.check(!phi_ext(full_twist(n)).is_identity(),
                "phi_ext(full twist) = id in B_" + std::to_string(n));
    return r;
}

/// 200 random skein instances and 200 left/right x-multiplication invariance
/// instances.
inline SuiteResult skein_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"skein"};
    Rng rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.range(2, 4));
        int i = static_cast<int>(rng.range(1, n));
        int k = static_cast<int>(rng.range(1, n));
        int j = static_cast<int>(rng.range(1, n));
        FreeWord w1 = random_free_word(rng, n, 5), w2 = random_free_word(rng, n, 5);
        r.check(check_skein(i, k, j, w1, w2), "skein (" + std::to_string(i) + "," + std::to_string(k) +
                                                  "," + std::to_string(j) + ") " + w1.render() + " | " +
                                                  w2.render());
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.range(2, 4));
        int i = static_cast<int>(rng.range(1, n));
        int j = static_cast<int>(rng.range(1, n));
        FreeWord w = random_free_word(rng, n, 5);
        NcPoly base = psi(i, j, w);
        FreeWord xi(n, {{i, 1}}), xii(n, {{i, -1}}), xj(n, {{j, 1}}), xjj(n, {{j, -1}});
        bool ok = psi(i, j, concat(xi, w)) == base && psi(i, j, concat(xii, w)) == base &&
                  psi(i, j, concat(w, xj)) == base && psi(i, j, concat(w, xjj)) == base;
        r.check(ok, "well-definedness (" + std::to_string(i) + "," + std::to_string(j) + ") " + w.render());
    }
    return r;
}

/// Conjugacy invariance of HC_0(B) on 20 seeded pairs in B_3. Each pair must
/// either have equal canonical forms outright or be carried onto each other
/// exactly by the explicit isomorphism phi_g (transport of the relator
/// ideal), which is the content of the invariance theorem.
inline SuiteResult conjugacy_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"conjugacy"};
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        BraidWord b = random_word(rng, 3, 0, 5);
        BraidWord g = random_word(rng, 3, 1, 4);
        Presentation p1 = hc0_braid(b);
        Presentation p2 = hc0_braid(conjugate(g, b));
        AbelianVars vars{3};
        bool ok = rings_equal(abelianize(p1), vars.count(), abelianize(p2), vars.count());
        if (!ok) {
            Presentation moved;
            moved.n = 3;
            GeneratorImageTable tg = phi(g);
            for (const NcPoly& rel : p1.relators) moved.add(apply_endomorphism(tg, rel));
            ok = reduced_bases_equal(abelianize(moved), abelianize(p2));
        }
        r.check(ok, "b=" + b.render() + " g=" + g.render());
    }
    return r;
}

/// Markov invariance of the closure invariant on 10 seeded stabilization
/// pairs.
inline SuiteResult markov_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"markov"};
    Rng rng(seed);
    int produced = 0;
    while (produced < 10) {
        int n = 2 + static_cast<int>(rng.below(2));
        BraidWord b = random_word(rng, n, 0, 5);
        if (!b.permutation().is_full_cycle()) continue;
        BraidWord s = b.markov_stabilize(rng.coin() ? 1 : -1);
        Presentation p1 = hc0_closure(b);
        Presentation p2 = hc0_closure(s);
        bool ok = rings_equal(abelianize(p1), AbelianVars{p1.n}.count(), abelianize(p2),
                              AbelianVars{p2.n}.count());
        r.check(ok, "b=" + b.render() + " in B_" + std::to_string(n));
        ++produced;
    }
    return r;
}

/// 100 seeded substitution checks of the Burau lemma, plus 20 seeded
/// continued fractions for Bur_B (0,0,1,1)^T = (-n+1, m-n+1, m+1, 1)^T.
inline SuiteResult burau_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"burau-lemma"};
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        int n = (trial % 2 == 0) ? 3 : 4;
        BraidWord w = random_word(rng, n, 0, 5);
        std::vector<long> v;
        for (int i = 0; i < n; ++i) v.push_back(rng.range(-3, 3));
        r.check(verify_burau_lemma(w, v), "word " + w.render());
    }
    int produced = 0;
    while (produced < 20) {
        // canonical two-bridge words (positive entries): the induction pair
        // then agrees with the normalized fraction
        ContinuedFraction cf;
        int parts = 1 + 2 * static_cast<int>(rng.below(3)); // odd length 1/3/5
        for (int p = 0; p < parts; ++p) cf.exponents.push_back(rng.range(1, 4));
        auto [m, n] = cf_to_fraction(cf);
        IntMatrix bur = burau_minus1(cf_to_plat(cf));
        std::vector<BigInt> u = bur.apply({0, 0, 1, 1});
        bool ok = u[0] == -n + 1 && u[1] == m - n + 1 && u[2] == m + 1 && u[3] == 1;
        std::string list;
        for (long e : cf.exponents) list += std::to_string(e) + ",";
        r.check(ok, "cf " + list + " m/n=" + to_string(m) + "/" + to_string(n));
        ++produced;
    }
    return r;
}

/// gcd(r_{m,m}, r_{n,m}) = p_{(m+1)/2} for all odd 3 <= m <= 31 and coprime
/// 0 < n < m.
inline SuiteResult gcd_lemma_suite() {
    SuiteResult r{"gcd-lemma"};
    for (int m = 3; m <= 31; m += 2) {
        UniPoly expected = p_poly((m + 1) / 2);
        for (int n = 1; n < m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            UniPoly g = gcd_primitive(r_poly(m, m), r_poly(n, m));
            r.check(g == expected, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
    return r;
}

/// The fixed two-bridge sweep: odd |m| between 3 and 15 covering
/// 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1, 7_4.
inline const std::vector<std::vector<long>>& two_bridge_sweep_list() {
    static const std::vector<std::vector<long>> list = {
        {3},              // 3_1, 3/1
        {2, 1, 1},        // 4_1, 5/2
        {5},              // 5_1, 5/1
        {3, 1, 1},        // 5_2, 7/2
        {4, 1, 1},        // 6_1, 9/2
        {3, 1, 2},        // 6_2, 11/3
        {2, 1, 1, 1, 1},  // 6_3, 13/5
        {7},              // 7_1, 7/1
        {3, 1, 3},        // 7_4, 15/4
    };
    return list;
}

inline SuiteResult two_bridge_sweep_suite() {
    SuiteResult r{"two-bridge-sweep"};
    for (const auto& exps : two_bridge_sweep_list()) {
        ContinuedFraction cf{exps};
        auto [m, n] = cf_to_fraction(cf);
        UniPoly expected = two_bridge_ring(cf);
        Presentation plat = hc0_plat(cf_to_plat(cf));
        UnivariateForm uf = univariate_form(abelianize(plat), AbelianVars{plat.n}.count());
        bool ok = uf.ok && unipoly_equal_up_to_sign(uf.poly, expected);
        r.check(ok, "fraction " + to_string(m) + "/" + to_string(n));
    }
    return r;
}

/// Numeric roots of p_{(m+1)/2} vs the cosine list, odd m <= 31.
inline SuiteResult char_roots_suite() {
    SuiteResult r{"char-roots"};
    for (int m = 1; m <= 31; m += 2)
        r.check(character_roots_check(m), "m=" + std::to_string(m));
    return r;
}

struct CrossMethodInput {
    std::string knot;
    BraidWord closure;
    BraidWord plat;
    PdCode diagram;
};

inline std::vector<CrossMethodInput> cross_method_inputs() {
    return {
        {"3_1", BraidWord(2, {1, 1, 1}), BraidWord(4, {2, 2, 2}),
         PdCode::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")},
        {"4_1", BraidWord(3, {1, -2, 1, -2}), cf_to_plat(ContinuedFraction{{2, 1, 1}}),
         PdCode::parse("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")},
        {"5_2", BraidWord(3, {1, 1, 1, 2, -1, 2}), cf_to_plat(ContinuedFraction{{3, 1, 1}}),
         PdCode::parse("X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]")},
    };
}

/// Braid closure, plat and diagram presentations of the same knot have equal
/// abelian canonical forms.
inline SuiteResult cross_method_suite() {
    SuiteResult r{"cross-method"};
    for (const auto& input : cross_method_inputs()) {
        Presentation c = hc0_closure(input.closure);
        Presentation p = hc0_plat(input.plat);
        Presentation d = hc0_diagram(input.diagram);
        auto gc = abelianize(c), gp = abelianize(p), gd = abelianize(d);
        bool cp = rings_equal(gc, AbelianVars{c.n}.count(), gp, AbelianVars{p.n}.count());
        bool cd = rings_equal(gc, AbelianVars{c.n}.count(), gd, AbelianVars{d.n}.count());
        r.check(cp, input.knot + ": closure vs plat");
        r.check(cd, input.knot + ": closure vs diagram");
    }
    return r;
}

/// All suites keyed by their CLI names.
inline std::vector<std::string> suite_names() {
    return {"matrix-identity", "center",          "skein",       "conjugacy",  "markov",
            "burau-lemma",     "gcd-lemma",       "two-bridge-sweep", "char-roots", "cross-method"};
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed) {
    if (name == "matrix-identity") return matrix_identity_suite(seed);
    if (name == "center") return center_suite();
    if (name == "skein") return skein_suite(seed);
    if (name == "conjugacy") return conjugacy_suite(seed);
    if (name == "markov") return markov_suite(seed);
    if (name == "burau-lemma") return burau_suite(seed);
    if (name == "gcd-lemma") return gcd_lemma_suite();
    if (name == "two-bridge-sweep") return two_bridge_sweep_suite();
    if (name == "char-roots") return char_roots_suite();
    if (name == "cross-method") return cross_method_suite();
    throw ParseError("unknown verification suite '" + name + "'");
}

} // namespace cordring::verify
