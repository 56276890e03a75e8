#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cordring {

/// Dense integer polynomial in one variable, coefficients ascending, no
/// trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<BigInt> ascending) : c_(ascending) { trim(); }
    static UniPoly constant(BigInt c) {
        UniPoly p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }
    static UniPoly x() { return UniPoly{0, 1}; }

    static UniPoly from_coeffs(std::vector<BigInt> ascending) {
        UniPoly p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const {
        if (c_.empty()) throw UndefinedDegree("degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : BigInt(0);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        out.trim();
        return out;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        out.trim();
        return out;
    }
    friend UniPoly operator-(const UniPoly& a) { return UniPoly::constant(0) - a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        out.trim();
        return out;
    }
    friend UniPoly operator*(const BigInt& k, const UniPoly& a) { return UniPoly::constant(k) * a; }

    /// Multiply by x^k.
    UniPoly shifted(int k) const {
        if (is_zero()) return {};
        UniPoly out;
        out.c_.assign(c_.size() + static_cast<std::size_t>(k), BigInt(0));
        std::copy(c_.begin(), c_.end(), out.c_.begin() + k);
        return out;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    BigInt content() const {
        BigInt g = 0;
        for (const BigInt& a : c_) g = big_gcd(g, a);
        return g;
    }

    /// Content removed, leading coefficient made positive.
    UniPoly primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        UniPoly out = *this;
        for (BigInt& a : out.c_) a /= g;
        return out;
    }

    /// p(-x).
    UniPoly negated_arg() const {
        UniPoly out = *this;
        for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
        return out;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
        return acc;
    }

    /// Descending-degree rendering with juxtaposed coefficients,
    /// e.g. "x^3 - x^2 - 3x + 2".
    std::string render(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline std::string UniPoly::render(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        BigInt a = coeff(k);
        if (a == 0) continue;
        BigInt mag = big_abs(a);
        if (out.empty())
            out += (a < 0) ? "-" : "";
        else
            out += (a < 0) ? " - " : " + ";
        std::string mono = (k == 0) ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0)
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + mono;
    }
    return out;
}

/// Pseudo-remainder of f by g (g nonzero), as in the primitive Euclidean
/// algorithm over Z[x].
inline UniPoly pseudo_rem(UniPoly f, const UniPoly& g) {
    const int dg = g.degree();
    const BigInt& lg = g.leading();
    while (!f.is_zero() && f.degree() >= dg) {
        int shift = f.degree() - dg;
        BigInt lf = f.leading();
        f = lg * f - lf * g.shifted(shift);
    }
    return f;
}

/// gcd over Q[x] followed by the primitive part in Z[x], sign-normalized to a
/// positive leading coefficient.
inline UniPoly gcd_primitive(UniPoly f, UniPoly g) {
    if (f.is_zero() && g.is_zero()) throw IndexError("gcd of two zero polynomials");
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    f = f.primitive();
    g = g.primitive();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = pseudo_rem(f, g).primitive();
        f = std::move(g);
        g = std::move(r);
        if (g.is_zero()) break;
    }
    return f.primitive();
}

} // namespace cordring
