#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace cordring {

/// A bijection of {1..n}, stored as images[i-1] = image of i.
class Permutation {
public:
    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        std::iota(images_.begin(), images_.end(), 1);
    }
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw IndexError("not a permutation");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
        return Permutation(std::move(inv));
    }

    /// this applied first, then other.
    Permutation then(const Permutation& other) const {
        std::vector<int> out(images_.size());
        for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = other((*this)(i));
        return Permutation(std::move(out));
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

    /// True iff the permutation is a single n-cycle.
    bool is_full_cycle() const {
        int i = 1, steps = 0;
        do {
            i = (*this)(i);
            ++steps;
        } while (i != 1 && steps <= size());
        return steps == size();
    }

private:
    std::vector<int> images_;
};

/// A word in the braid group B_n. Letters are nonzero integers k with
/// |k| < strands; the sign is the exponent of the generator.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw ParseError("strand count must be positive");
        for (int l : letters_) {
            if (l == 0) throw ParseError("braid letter 0 is not a generator");
            if (std::abs(l) >= strands_)
                throw InvalidGenerator("generator index " + std::to_string(std::abs(l)) +
                                       " out of range for " + std::to_string(strands_) + " strands");
        }
    }

    static BraidWord parse(std::string_view text, int strands);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    BraidWord inverse() const {
        std::vector<int> out(letters_.rbegin(), letters_.rend());
        for (int& l : out) l = -l;
        return BraidWord(strands_, std::move(out));
    }

    /// Word with letters in reverse order, signs unchanged.
    BraidWord reversed() const {
        return BraidWord(strands_, std::vector<int>(letters_.rbegin(), letters_.rend()));
    }

    /// The same word regarded in B_{strands + extra}.
    BraidWord widened(int extra) const { return BraidWord(strands_ + extra, letters_); }

    /// w * sigma_n^{sign} in B_{n+1}.
    BraidWord markov_stabilize(int sign) const {
        std::vector<int> out = letters_;
        out.push_back(sign > 0 ? strands_ : -strands_);
        return BraidWord(strands_ + 1, std::move(out));
    }

    Permutation permutation() const {
        Permutation p(strands_);
        for (int l : letters_) {
            int k = std::abs(l);
            std::vector<int> t(static_cast<std::size_t>(strands_));
            std::iota(t.begin(), t.end(), 1);
            std::swap(t[static_cast<std::size_t>(k - 1)], t[static_cast<std::size_t>(k)]);
            p = p.then(Permutation(std::move(t)));
        }
        return p;
    }

    std::string render() const {
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(letters_[i]);
        }
        return out;
    }

    bool operator==(const BraidWord& o) const { return strands_ == o.strands_ && letters_ == o.letters_; }

private:
    int strands_;
    std::vector<int> letters_;
};

/// Concatenation with free reduction of adjacent inverse pairs.
inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatch("cannot compose words in B_" + std::to_string(a.strands()) + " and B_" +
                             std::to_string(b.strands()));
    std::vector<int> out;
    out.reserve(a.length() + b.length());
    auto push = [&out](int l) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    };
    for (int l : a.letters()) push(l);
    for (int l : b.letters()) push(l);
    return BraidWord(a.strands(), std::move(out));
}

inline BraidWord conjugate(const BraidWord& g, const BraidWord& w) {
    return compose(compose(g, w), g.inverse());
}

inline BraidWord BraidWord::parse(std::string_view text, int strands) {
    std::vector<int> letters;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad braid letter '" + token + "'");
        }
        if (pos != token.size()) throw ParseError("bad braid letter '" + token + "'");
        letters.push_back(static_cast<int>(v));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            token += c;
    }
    flush();
    return BraidWord(strands, std::move(letters));
}

/// Plat word in B_6 whose closure is the (p, q, r) pretzel: wiring braids
/// route the standard caps into the nested pretzel pattern, with twist
/// regions sigma_1^p, sigma_3^q, sigma_5^r between them. Positive parameters
/// give the positive sigma twists; P(3,3,2) lands on the 21-determinant
/// pretzel.
inline BraidWord pretzel_plat(int p, int q, int r) {
    std::vector<int> letters{2, 3, 4, 5};
    auto twist = [&letters](int gen, int count) {
        for (int c = 0; c < std::abs(count); ++c) letters.push_back(count > 0 ? gen : -gen);
    };
    twist(1, p);
    twist(3, q);
    twist(5, r);
    for (int x : {5, 4, 3, 2}) letters.push_back(x);
    return BraidWord(6, std::move(letters));
}

/// Whether the plat closure of w (strands 2i-1, 2i joined at both ends) is a
/// single closed loop.
inline bool plat_is_knot(const BraidWord& w) {
    const int n = w.strands();
    if (n % 2 != 0) throw OddStrands("plat closure needs an even strand count");
    Permutation p = w.permutation();
    Permutation pinv = p.inverse();
    auto partner = [](int i) { return (i % 2 == 1) ? i + 1 : i - 1; };
    // Walk the closure starting down strand 1. Each step goes down one strand,
    // across the bottom cap, up a strand and across the top cap, so the orbit
    // returns to 1 after (#strands in the component)/2 steps.
    int count = 0;
    int top = 1;
    do {
        top = partner(pinv(partner(p(top))));
        ++count;
    } while (top != 1 && count <= n);
    return 2 * count == n;
}

} // namespace cordring
