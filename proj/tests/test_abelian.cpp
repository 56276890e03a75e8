#include <catch2/catch_amalgamated.hpp>

#include <cordring/abelian.hpp>
#include <cordring/ringforms.hpp>
#include <cordring/rng.hpp>
#include <cordring/twobridge.hpp>

#include <algorithm>

using namespace cordring;

namespace {

// 1-variable polynomial from ascending integer coefficients
CommPoly uni(std::vector<long> coeffs, MonOrder ord = MonOrder::grevlex) {
    CommPoly p(1, ord);
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        p.add_term(Expo{static_cast<int>(d)}, BigInt(coeffs[d]));
    return p;
}

CommPoly random_comm(Rng& rng, int nvars, int max_terms, int max_deg) {
    CommPoly p(nvars, MonOrder::grevlex);
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Expo e(static_cast<std::size_t>(nvars), 0);
        for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        p.add_term(e, BigInt(rng.range(-6, 6)));
    }
    return p;
}

} // namespace

TEST_CASE("monomial orders") {
    // grevlex: degree first
    CHECK(cmp_expo({2, 0, 0}, {1, 1, 1}, MonOrder::grevlex) < 0);
    // same degree: smaller last exponent wins
    CHECK(cmp_expo({1, 1, 0}, {1, 0, 1}, MonOrder::grevlex) > 0);
    CHECK(cmp_expo({0, 2, 0}, {1, 0, 1}, MonOrder::grevlex) > 0);
    // lex: first variable dominates
    CHECK(cmp_expo({1, 0, 0}, {0, 5, 5}, MonOrder::lex) > 0);
}

TEST_CASE("abelianize identifies transposed generators") {
    Presentation p;
    p.n = 2;
    p.add(NcPoly::generator(1, 2, 2) - NcPoly::generator(2, 1, 2));
    CHECK(abelianize(p).empty()); // relator collapses to zero
    Presentation q;
    q.n = 2;
    q.add(NcPoly::constant(2) - scale(3, NcPoly::generator(1, 2, 2)) +
          NcPoly::generator(1, 2, 2) * NcPoly::generator(2, 1, 2) * NcPoly::generator(1, 2, 2));
    auto gens = abelianize(q);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == uni({2, -3, 0, 1})); // 2 - 3b + b^3
    Presentation c;
    c.n = 2;
    c.add(NcPoly::constant(5));
    auto cg = abelianize(c);
    REQUIRE(cg.size() == 1);
    CHECK(cg[0].is_constant());
}

TEST_CASE("groebner on the trefoil plat relations") {
    // relations in x := -a12: 2+3x-x^3, -2-x+x^2, 2-x-4x^2+x^4, gcd x^2-x-2;
    // in the b variable these are 2-3b+b^3, -2+b+b^2, 2+b-4b^2+b^4
    std::vector<CommPoly> gens = {uni({2, -3, 0, 1}), uni({-2, 1, 1}), uni({2, 1, -4, 0, 1})};
    GroebnerBasisZ gb = groebner(gens, MonOrder::grevlex);
    REQUIRE(gb.polys.size() == 1);
    CHECK(gb.polys[0] == uni({-2, 1, 1}));
}

TEST_CASE("groebner basics") {
    CHECK(groebner({}, MonOrder::grevlex).polys.empty());
    CHECK(groebner({uni({0})}, MonOrder::grevlex).polys.empty());
    GroebnerBasisZ gb = groebner({uni({0, 2}), uni({0, 3})}, MonOrder::grevlex);
    REQUIRE(gb.polys.size() == 1);
    CHECK(gb.polys[0] == uni({0, 1})); // gcd of 2x and 3x is x
}

TEST_CASE("normal form") {
    GroebnerBasisZ gb = groebner({uni({-2, -1, 1})}, MonOrder::grevlex); // x^2 - x - 2
    CHECK(normal_form(uni({0, 0, 0, 1}), gb) == uni({2, 3}));           // x^3 -> 3x + 2
    CHECK(normal_form(uni({-2, -1, 1}), gb).is_zero());
    CHECK(normal_form(uni({1}), groebner({uni({0, 1})}, MonOrder::grevlex)) == uni({1}));
}

TEST_CASE("normal form is idempotent and detects membership") {
    Rng rng(kDefaultSeed + 31);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<CommPoly> gens;
        int k = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < k; ++i) gens.push_back(random_comm(rng, 2, 3, 3));
        GroebnerBasisZ gb = groebner(gens, MonOrder::grevlex);
        for (const CommPoly& g : gens) CHECK(normal_form(g, gb).is_zero());
        CommPoly p = random_comm(rng, 2, 3, 3);
        CommPoly nf = normal_form(p, gb);
        CHECK(normal_form(nf, gb) == nf);
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    Rng rng(kDefaultSeed + 32);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<CommPoly> gens;
        int k = static_cast<int>(rng.range(2, 4));
        for (int i = 0; i < k; ++i) gens.push_back(random_comm(rng, 2, 3, 2));
        GroebnerBasisZ ref = groebner(gens, MonOrder::grevlex);
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t i = gens.size(); i > 1; --i)
                std::swap(gens[i - 1], gens[rng.below(i)]);
            GroebnerBasisZ other = groebner(gens, MonOrder::grevlex);
            REQUIRE(ref.polys.size() == other.polys.size());
            for (std::size_t i = 0; i < ref.polys.size(); ++i) CHECK(ref.polys[i] == other.polys[i]);
        }
    }
}

TEST_CASE("univariate groebner agrees with the euclidean gcd") {
    // The minimal-degree element of the strong basis of (f, g) generates the
    // same Q[x] ideal as gcd(f, g): its primitive part is the primitive gcd.
    Rng rng(kDefaultSeed + 33);
    int checked = 0;
    while (checked < 25) {
        UniPoly f = UniPoly::constant(1), g = UniPoly::constant(1);
        for (int i = 0; i < 3; ++i) {
            UniPoly factor{BigInt(rng.range(-3, 3)), BigInt(rng.range(1, 3))};
            if (rng.coin()) f = f * factor;
            if (rng.coin()) g = g * factor;
        }
        if (f.is_zero() || g.is_zero() || f.degree() == 0 || g.degree() == 0) continue;
        ++checked;
        UniPoly gcd = gcd_primitive(f, g);
        auto to_comm = [](const UniPoly& p) {
            CommPoly out(1, MonOrder::grevlex);
            for (int d = 0; d <= p.degree(); ++d) out.add_term(Expo{d}, p.coeff(d));
            return out;
        };
        GroebnerBasisZ gb = groebner({to_comm(f), to_comm(g)}, MonOrder::grevlex);
        REQUIRE_FALSE(gb.polys.empty());
        CHECK(gb.polys.front().to_unipoly(0).primitive() == gcd);
        for (const CommPoly& e : gb.polys) CHECK(pseudo_rem(e.to_unipoly(0), gcd).is_zero());
    }
}

TEST_CASE("univariate_form outcomes") {
    // trefoil plat ideal
    UnivariateForm tre = univariate_form({uni({2, -3, 0, 1}), uni({-2, 1, 1}), uni({2, 1, -4, 0, 1})}, 1);
    REQUIRE(tre.ok);
    CHECK(tre.poly == UniPoly{-2, 1, 1});
    CHECK(ring_string_univariate(tre, XConvention::negated) == "Z[x]/(x^2 - x - 2)");
    CHECK(ring_string_univariate(tre, XConvention::plain) == "Z[x]/(x^2 + x - 2)");

    // no generators at all: the ring Z
    UnivariateForm z = univariate_form({}, 0);
    REQUIRE(z.ok);
    CHECK(ring_string_univariate(z, XConvention::plain) == "Z");

    // three symmetric variables with no relations: not a quotient of Z[x]
    CommPoly zero3(3, MonOrder::grevlex);
    UnivariateForm fail = univariate_form({zero3}, 3);
    CHECK_FALSE(fail.ok);

    // x pinned to a constant and y free of relations
    CommPoly pin(2, MonOrder::grevlex);
    pin.add_term(Expo{1, 0}, 1);
    pin.add_term(Expo{0, 0}, 2);
    UnivariateForm pivoted = univariate_form({pin}, 2);
    REQUIRE(pivoted.ok);
    CHECK(pivoted.var == 1);
    CHECK(pivoted.poly.is_zero());
}

TEST_CASE("ring comparison up to sign and variable bijection") {
    CHECK(unipoly_equal_up_to_sign(UniPoly{-2, -1, 1}, UniPoly{-2, 1, 1}));
    CHECK_FALSE(unipoly_equal_up_to_sign(UniPoly{-2, -1, 1}, UniPoly{2, 1, 1}));
    // same ideal under swapping the two variables
    CommPoly f(2, MonOrder::grevlex), g(2, MonOrder::grevlex);
    f.add_term(Expo{1, 0}, 1);
    f.add_term(Expo{0, 2}, 3);
    g.add_term(Expo{0, 1}, 1);
    g.add_term(Expo{2, 0}, 3);
    CHECK(rings_equal({f, f}, 2, {g, g}, 2));
}
