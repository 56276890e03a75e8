#pragma once

#include "braid.hpp"
#include "ncalg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cordring {

/// A word in the free group F_n, letters (generator index, exponent +-1).
class FreeWord {
public:
    struct Letter {
        int index;
        int exp; // +1 or -1
        auto operator<=>(const Letter&) const = default;
    };

    FreeWord(int rank, std::vector<Letter> letters = {}) : rank_(rank), letters_(std::move(letters)) {
        if (rank_ < 1) throw ParseError("free group rank must be positive");
        for (const Letter& l : letters_) {
            if (l.index < 1 || l.index > rank_)
                throw IndexError("free generator x" + std::to_string(l.index) + " out of range");
            if (l.exp != 1 && l.exp != -1) throw ParseError("free word exponents must be +-1");
        }
    }

    /// Whitespace-separated tokens like "x3^-1 x2".
    static FreeWord parse(std::string_view text, int rank);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }

    FreeWord reduced() const {
        std::vector<Letter> out;
        for (const Letter& l : letters_) {
            if (!out.empty() && out.back().index == l.index && out.back().exp == -l.exp)
                out.pop_back();
            else
                out.push_back(l);
        }
        return FreeWord(rank_, std::move(out));
    }

    FreeWord inverse() const {
        std::vector<Letter> out(letters_.rbegin(), letters_.rend());
        for (Letter& l : out) l.exp = -l.exp;
        return FreeWord(rank_, std::move(out));
    }

    friend FreeWord concat(const FreeWord& a, const FreeWord& b) {
        if (a.rank_ != b.rank_) throw StrandMismatch("free word rank mismatch");
        std::vector<Letter> out = a.letters_;
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return FreeWord(a.rank_, std::move(out));
    }

    std::string render() const {
        std::string out;
        for (const Letter& l : letters_) {
            if (!out.empty()) out += " ";
            out += "x" + std::to_string(l.index);
            if (l.exp < 0) out += "^-1";
        }
        return out;
    }

    bool operator==(const FreeWord& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }

private:
    int rank_;
    std::vector<Letter> letters_;
};

inline FreeWord FreeWord::parse(std::string_view text, int rank) {
    std::vector<Letter> letters;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        if (token[0] != 'x') throw ParseError("bad free-word token '" + token + "'");
        std::string body = token.substr(1);
        int exp = 1;
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            std::string e = body.substr(caret + 1);
            body = body.substr(0, caret);
            if (e == "-1")
                exp = -1;
            else if (e == "1")
                exp = 1;
            else
                throw ParseError("bad exponent in token; expected ^1 or ^-1");
        }
        try {
            std::size_t pos = 0;
            int idx = std::stoi(body, &pos);
            if (pos != body.size()) throw ParseError("");
            letters.push_back(Letter{idx, exp});
        } catch (const ParseError&) {
            throw ParseError("bad free-word token '" + token + "'");
        } catch (const std::exception&) {
            throw ParseError("bad free-word token '" + token + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            token += c;
    }
    flush();
    return FreeWord(rank, std::move(letters));
}

/// Monomial in the y-algebra: generator indices with no two adjacent equal
/// (y_i y_i rewrites to -2 y_i on the spot).
using YMonomial = std::vector<int>;

struct YMonomialLess {
    bool operator()(const YMonomial& a, const YMonomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Integer-coefficient polynomial in y_1..y_n modulo y_i^2 + 2 y_i, kept in
/// reduced form.
class YPoly {
public:
    using TermMap = std::map<YMonomial, BigInt, YMonomialLess>;

    YPoly() = default;
    static YPoly constant(BigInt c) {
        YPoly p;
        if (c != 0) p.terms_[YMonomial{}] = std::move(c);
        return p;
    }
    static YPoly generator(int i) {
        YPoly p;
        p.terms_[YMonomial{i}] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    YPoly& operator+=(const YPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }

    friend YPoly operator*(const YPoly& a, const YPoly& b) {
        YPoly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                BigInt c = ca * cb;
                YMonomial m = ma;
                if (!ma.empty() && !mb.empty() && ma.back() == mb.front()) {
                    // boundary y_i y_i -> -2 y_i; interiors of ma, mb are
                    // already reduced, so no cascade is possible
                    c *= -2;
                    m.insert(m.end(), mb.begin() + 1, mb.end());
                } else {
                    m.insert(m.end(), mb.begin(), mb.end());
                }
                out.add_term(std::move(m), std::move(c));
            }
        }
        return out;
    }
    YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

    bool operator==(const YPoly& o) const { return terms_ == o.terms_; }

    void add_term(YMonomial m, BigInt c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

/// Y(w): product of (-1 - y_i) over the letters, exponent signs immaterial.
inline YPoly y_of_word(const FreeWord& w) {
    YPoly acc = YPoly::constant(1);
    for (const auto& l : w.letters())
        acc *= (YPoly::constant(-1) - YPoly::generator(l.index));
    return acc;
}

/// alpha_{ij}: linear extension of y_{i1}...y_{im} -> a_{i,i1} a_{i1,i2} ...
/// a_{im,j}, with every diagonal link collapsing to the scalar -2.
inline NcPoly alpha(int i, int j, const YPoly& p, int n) {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("alpha endpoint out of range");
    NcPoly out;
    for (const auto& [mono, c] : p.terms()) {
        NcPoly chain = NcPoly::constant(c);
        int prev = i;
        for (int idx : mono) {
            if (idx < 1 || idx > n) throw IndexError("y index out of range");
            chain *= NcPoly::generator(prev, idx, n);
            prev = idx;
        }
        chain *= NcPoly::generator(prev, j, n);
        out += chain;
    }
    return out;
}

/// psi of the cord with endpoints (i, j) and free-group data w.
inline NcPoly psi(int i, int j, const FreeWord& w) {
    return alpha(i, j, y_of_word(w), w.rank());
}

/// The skein relation with w1 a word from puncture i to k and w2 from k to j:
/// psi(i,j, w1 w2) + psi(i,j, w1 x_k w2) + psi(i,k,w1) psi(k,j,w2) = 0.
inline bool check_skein(int i, int k, int j, const FreeWord& w1, const FreeWord& w2) {
    FreeWord xk(w1.rank(), {FreeWord::Letter{k, 1}});
    NcPoly lhs = psi(i, j, concat(w1, w2)) + psi(i, j, concat(concat(w1, xk), w2)) +
                 psi(i, k, w1) * psi(k, j, w2);
    return lhs.is_zero();
}

/// A cord presented by its endpoints and free-group word.
struct Cord {
    int i;
    int j;
    FreeWord w;
};

/// Action of sigma_k^{sign} on cords, calibrated so that
/// psi(sigma . gamma) = phi_sigma(psi(gamma)) holds against the generator
/// table. On the word this is the Artin substitution
/// x_k -> x_k x_{k+1} x_k^{-1}, x_{k+1} -> x_k, with endpoints swapped by
/// (k, k+1); an endpoint sitting at puncture k additionally contributes a
/// boundary letter x_k on its side (the closure arc of the cord sweeps once
/// around the moving puncture). For sign -1 the boundary letter is x_{k+1}
/// at endpoints sitting at k+1.
inline Cord act_generator(int k, int sign, const Cord& c) {
    const int n = c.w.rank();
    if (k < 1 || k >= n) throw IndexError("sigma index out of range for the cord's rank");
    auto tau = [k](int v) { return v == k ? k + 1 : (v == k + 1 ? k : v); };
    std::vector<FreeWord::Letter> out;
    auto push = [&out](int index, int exp) { out.push_back(FreeWord::Letter{index, exp}); };
    if (sign >= 0) {
        if (c.i == k) push(k, 1);
        for (const auto& l : c.w.letters()) {
            if (l.index == k) {
                if (l.exp > 0) {
                    push(k, 1), push(k + 1, 1), push(k, -1);
                } else {
                    push(k, 1), push(k + 1, -1), push(k, -1);
                }
            } else if (l.index == k + 1) {
                push(k, l.exp);
            } else {
                push(l.index, l.exp);
            }
        }
        if (c.j == k) push(k, 1);
    } else {
        if (c.i == k + 1) push(k + 1, 1);
        for (const auto& l : c.w.letters()) {
            if (l.index == k) {
                push(k + 1, l.exp);
            } else if (l.index == k + 1) {
                push(k + 1, -1), push(k, l.exp), push(k + 1, 1);
            } else {
                push(l.index, l.exp);
            }
        }
        if (c.j == k + 1) push(k + 1, 1);
    }
    return Cord{tau(c.i), tau(c.j), FreeWord(n, std::move(out)).reduced()};
}

/// Left action of a braid word on a cord: the last letter acts first.
inline Cord act(const BraidWord& b, Cord c) {
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
        c = act_generator(std::abs(*it), *it > 0 ? +1 : -1, c);
    return c;
}

} // namespace cordring
