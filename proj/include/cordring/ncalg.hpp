#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cordring {

/// One generator a_{ij} of the free algebra, i != j, 1-based. Diagonal pairs
/// never occur as factors: generator construction turns a_{ii} into the
/// scalar -2 before a monomial is formed.
struct Gen {
    int i = 0;
    int j = 0;
    auto operator<=>(const Gen&) const = default;
};

/// Product of generators; the empty word is the unit monomial.
using NcMonomial = std::vector<Gen>;

/// Total order on monomials: length first, then lexicographic on the factor
/// sequence. Fixed once so term maps iterate deterministically.
struct NcMonomialLess {
    bool operator()(const NcMonomial& a, const NcMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Integer-coefficient polynomial in the free (tensor) algebra on the a_{ij}.
class NcPoly {
public:
    using TermMap = std::map<NcMonomial, BigInt, NcMonomialLess>;

    NcPoly() = default;

    static NcPoly constant(BigInt c) {
        NcPoly p;
        if (c != 0) p.terms_[NcMonomial{}] = std::move(c);
        return p;
    }

    /// a_{ij} if i != j, the constant -2 if i == j.
    static NcPoly generator(int i, int j, int n) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw IndexError("generator index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for n=" + std::to_string(n));
        if (i == j) return constant(-2);
        NcPoly p;
        p.terms_[NcMonomial{Gen{i, j}}] = 1;
        return p;
    }

    static NcPoly from_terms(TermMap terms) {
        NcPoly p;
        p.terms_ = std::move(terms);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    BigInt constant_term() const {
        auto it = terms_.find(NcMonomial{});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Maximal factor-list length over terms. Undefined for the zero polynomial.
    int degree() const {
        if (terms_.empty()) throw UndefinedDegree("degree of the zero polynomial");
        return static_cast<int>(terms_.rbegin()->first.size());
    }

    /// Largest generator index appearing in any factor (0 for constants).
    int max_index() const {
        int m = 0;
        for (const auto& [mono, c] : terms_)
            for (const Gen& g : mono) m = std::max({m, g.i, g.j});
        return m;
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(const NcPoly& a) { return scale(-1, a); }

    friend NcPoly scale(const BigInt& c, const NcPoly& p) {
        NcPoly out;
        if (c == 0) return out;
        for (const auto& [mono, k] : p.terms_) out.terms_[mono] = c * k;
        return out;
    }

    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                NcMonomial m;
                m.reserve(ma.size() + mb.size());
                m.insert(m.end(), ma.begin(), ma.end());
                m.insert(m.end(), mb.begin(), mb.end());
                out.add_term(std::move(m), ca * cb);
            }
        }
        return out;
    }
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    /// Canonical text, terms in the fixed monomial order, e.g.
    /// "2 - 3*a12 + a12*a21*a12".
    std::string render() const;

    nlohmann::json to_json() const;
    static NcPoly from_json(const nlohmann::json& j);

    void add_term(NcMonomial mono, BigInt c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(mono), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

inline std::string render_gen(const Gen& g) {
    if (g.i <= 9 && g.j <= 9) return "a" + std::to_string(g.i) + std::to_string(g.j);
    return "a[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
}

inline std::string NcPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        BigInt a = big_abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string m;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (k) m += "*";
            m += render_gen(mono[k]);
        }
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += m;
        else
            out += to_string(a) + "*" + m;
    }
    return out;
}

inline nlohmann::json NcPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mono, c] : terms_) {
        nlohmann::json t;
        if (fits_int64(c))
            t["coeff"] = static_cast<std::int64_t>(c);
        else
            t["coeff"] = to_string(c);
        nlohmann::json factors = nlohmann::json::array();
        for (const Gen& g : mono) factors.push_back({g.i, g.j});
        t["factors"] = std::move(factors);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline NcPoly NcPoly::from_json(const nlohmann::json& j) {
    NcPoly p;
    for (const auto& t : j) {
        BigInt c;
        if (t.at("coeff").is_string())
            c = BigInt(t.at("coeff").get<std::string>());
        else
            c = BigInt(t.at("coeff").get<std::int64_t>());
        NcMonomial mono;
        for (const auto& f : t.at("factors")) mono.push_back(Gen{f.at(0).get<int>(), f.at(1).get<int>()});
        p.add_term(std::move(mono), std::move(c));
    }
    return p;
}

} // namespace cordring
