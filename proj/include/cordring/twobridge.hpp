#pragma once

#include "braid.hpp"
#include "intmatrix.hpp"
#include "phirep.hpp"
#include "unipoly.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace cordring {

/// p_0 = 2 - x, p_1 = x - 2, p_{m+1} = x p_m - p_{m-1}.
inline UniPoly p_poly(int m) {
    if (m < 0) throw IndexError("p_m is defined for m >= 0");
    UniPoly prev{2, -1}; // p_0
    if (m == 0) return prev;
    UniPoly cur{-2, 1}; // p_1
    for (int k = 1; k < m; ++k) {
        UniPoly next = cur.shifted(1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// q_0 = -2, q_1 = -x, q_{m+1} = x q_m - q_{m-1}; q_{-m} = q_m.
inline UniPoly q_poly(int m) {
    m = std::abs(m);
    UniPoly prev = UniPoly::constant(-2);
    if (m == 0) return prev;
    UniPoly cur{0, -1}; // q_1
    for (int k = 1; k < m; ++k) {
        UniPoly next = cur.shifted(1) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// r_{k,m} = q_k - q_{k-m}.
inline UniPoly r_poly(int k, int m) { return q_poly(k) - q_poly(k - m); }

/// Burau matrices at t = -1. The generator block on rows/columns k, k+1 is
/// [[2, -1], [1, 0]] (the unreduced Burau matrix [[1-t, t], [1, 0]] at
/// t = -1); its integer inverse is [[0, 1], [-1, 2]]. Words multiply in word
/// order.
inline IntMatrix burau_minus1(const BraidWord& w) {
    const int n = w.strands();
    IntMatrix acc = IntMatrix::identity(n);
    for (int l : w.letters()) {
        IntMatrix g = IntMatrix::identity(n);
        int k = std::abs(l);
        if (l > 0) {
            g.at(k, k) = 2;
            g.at(k, k + 1) = -1;
            g.at(k + 1, k) = 1;
            g.at(k + 1, k + 1) = 0;
        } else {
            g.at(k, k) = 0;
            g.at(k, k + 1) = 1;
            g.at(k + 1, k) = -1;
            g.at(k + 1, k + 1) = 2;
        }
        acc = acc * g;
    }
    return acc;
}

/// Alternating exponent list a1, b1, a2, ..., encoding the 4-plat word
/// sigma_2^{-a1} sigma_1^{b1} sigma_2^{-a2} ... and the continued fraction
/// m/n = a1 + 1/(b1 + 1/(a2 + ...)).
struct ContinuedFraction {
    std::vector<long> exponents;

    /// Comma/space-separated exponent list, e.g. "3,1,1". Zero entries are
    /// allowed; the fraction arithmetic is projective.
    static ContinuedFraction parse(std::string_view text) {
        ContinuedFraction cf;
        std::string token;
        auto flush = [&]() {
            if (token.empty()) return;
            std::size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(token, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad continued-fraction entry '" + token + "'");
            }
            if (pos != token.size()) throw ParseError("bad continued-fraction entry '" + token + "'");
            cf.exponents.push_back(v);
            token.clear();
        };
        for (char c : text) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
                flush();
            else
                token += c;
        }
        flush();
        if (cf.exponents.empty()) throw ParseError("empty continued fraction");
        return cf;
    }
};

/// Normalized fraction value (gcd(m, n) = 1, n > 0).
inline std::pair<BigInt, BigInt> cf_to_fraction(const ContinuedFraction& cf) {
    BigInt num = 1, den = 0; // evaluate from the right: starts as "empty tail"
    for (auto it = cf.exponents.rbegin(); it != cf.exponents.rend(); ++it) {
        // value = e + 1/value, projectively (num/den) -> (e*num + den, num)
        BigInt e = *it;
        BigInt new_num = e * num + den;
        den = num;
        num = std::move(new_num);
    }
    if (den == 0) throw NotAKnot("continued fraction evaluates to infinity");
    BigInt g = big_gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

/// The B_4 word sigma_2^{-a1} sigma_1^{b1} sigma_2^{-a2} ...
inline BraidWord cf_to_plat(const ContinuedFraction& cf) {
    std::vector<int> letters;
    for (std::size_t idx = 0; idx < cf.exponents.size(); ++idx) {
        long e = cf.exponents[idx];
        bool sigma2 = (idx % 2 == 0);
        int letter = sigma2 ? (e > 0 ? -2 : 2) : (e > 0 ? 1 : -1);
        for (long c = 0; c < std::labs(e); ++c) letters.push_back(letter);
    }
    return BraidWord(4, std::move(letters));
}

/// Reversed braid word, signs unchanged.
inline BraidWord reverse(const BraidWord& w) { return w.reversed(); }

/// Substitute a_{kl} -> q_{v_k - v_l} into every image of phi_w and compare
/// with q at the Burau-transported differences, using the reversed word.
inline bool verify_burau_lemma(const BraidWord& w, const std::vector<long>& v) {
    const int n = w.strands();
    if (static_cast<int>(v.size()) != n) throw IndexError("substitution vector length must equal strands");
    GeneratorImageTable t = phi(w);
    IntMatrix bur = burau_minus1(reverse(w));
    std::vector<BigInt> vb;
    vb.reserve(v.size());
    for (long x : v) vb.emplace_back(x);
    std::vector<BigInt> u = bur.apply(vb);

    auto q_of = [](const BigInt& d) { return q_poly(d.convert_to<int>()); };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            UniPoly lhs;
            for (const auto& [mono, c] : t.image(i, j).terms()) {
                UniPoly prod = UniPoly::constant(c);
                for (const Gen& g : mono)
                    prod = prod * q_poly(static_cast<int>(v[static_cast<std::size_t>(g.i - 1)] -
                                                          v[static_cast<std::size_t>(g.j - 1)]));
                lhs = lhs + prod;
            }
            UniPoly rhs = q_of(u[static_cast<std::size_t>(i - 1)] - u[static_cast<std::size_t>(j - 1)]);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

/// The defining polynomial of the two-bridge cord ring: p_{(|m|+1)/2} where
/// m/n is the fraction of the continued fraction. m must be odd (a knot, not
/// a two-component link).
inline UniPoly two_bridge_ring(const ContinuedFraction& cf) {
    auto [m, n] = cf_to_fraction(cf);
    BigInt am = big_abs(m);
    if (am % 2 == 0) throw NotAKnot("even determinant: the fraction describes a two-component link");
    return p_poly(((am + 1) / 2).convert_to<int>());
}

/// Roots of p_{(m+1)/2} vs {2 cos(2 pi k / m) : 0 <= k <= (m-1)/2}, absolute
/// tolerance 1e-9. Roots are found independently by sign-change bracketing
/// and bisection (they are simple and real, spread inside [-2, 2]).
inline bool character_roots_check(int m) {
    if (m < 1 || m % 2 == 0) throw IndexError("m must be odd and positive");
    UniPoly p = p_poly((m + 1) / 2);
    const int deg = p.degree();
    std::vector<double> roots;
    const double lo = -2.5, hi = 2.5;
    const int grid = 20000;
    double prev_x = lo, prev_v = p.eval_double(lo);
    for (int s = 1; s <= grid; ++s) {
        double x = lo + (hi - lo) * s / grid;
        double v = p.eval_double(x);
        if (v == 0.0) {
            roots.push_back(x);
            prev_x = x;
            prev_v = v;
            continue;
        }
        if (prev_v != 0.0 && ((prev_v < 0) != (v < 0))) {
            double a = prev_x, b = x, fa = prev_v;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (a + b);
                double fm = p.eval_double(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0) != (fm < 0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_v = v;
    }
    if (static_cast<int>(roots.size()) != deg) return false;
    std::vector<double> expected;
    for (int k = 0; k <= (m - 1) / 2; ++k) expected.push_back(2.0 * std::cos(2.0 * M_PI * k / m));
    std::sort(expected.begin(), expected.end());
    std::sort(roots.begin(), roots.end());
    if (expected.size() != roots.size()) return false;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (std::abs(roots[i] - expected[i]) > 1e-9) return false;
    return true;
}

} // namespace cordring
