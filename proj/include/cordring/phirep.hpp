#pragma once

#include "braid.hpp"
#include "ncalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cordring {

/// Images of all n(n-1) generators under an algebra endomorphism of A_n.
class GeneratorImageTable {
public:
    explicit GeneratorImageTable(int n) : n_(n), images_(static_cast<std::size_t>(n) * n) {}

    static GeneratorImageTable identity(int n) {
        GeneratorImageTable t(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) t.set(i, j, NcPoly::generator(i, j, n));
        return t;
    }

    int n() const { return n_; }

    const NcPoly& image(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
            throw IncompleteTable("no image for a_{" + std::to_string(i) + "," + std::to_string(j) +
                                  "} in a table over A_" + std::to_string(n_));
        return images_[idx(i, j)];
    }

    void set(int i, int j, NcPoly p) { images_[idx(i, j)] = std::move(p); }

    bool is_identity() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && image(i, j) != NcPoly::generator(i, j, n_)) return false;
        return true;
    }

    bool operator==(const GeneratorImageTable& o) const { return n_ == o.n_ && images_ == o.images_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

    int n_;
    std::vector<NcPoly> images_;
};

/// The unique algebra-map extension of the table applied to p: substitute the
/// image of every factor and expand. Constants map to themselves. If cap is
/// set and any partial product exceeds it in degree, DegreeCapExceeded is
/// thrown instead of exhausting memory.
inline NcPoly apply_endomorphism(const GeneratorImageTable& table, const NcPoly& p,
                                 std::optional<int> cap = std::nullopt) {
    NcPoly out;
    for (const auto& [mono, c] : p.terms()) {
        NcPoly prod = NcPoly::constant(c);
        for (const Gen& g : mono) {
            prod *= table.image(g.i, g.j);
            if (cap && !prod.is_zero() && prod.degree() > *cap)
                throw DegreeCapExceeded("image degree exceeds cap " + std::to_string(*cap));
        }
        out += prod;
    }
    return out;
}

/// first applied after second: (first . second)(g) = first(second(g)).
inline GeneratorImageTable compose_tables(const GeneratorImageTable& first, const GeneratorImageTable& second,
                                          std::optional<int> cap = std::nullopt) {
    GeneratorImageTable out(second.n());
    for (int i = 1; i <= second.n(); ++i)
        for (int j = 1; j <= second.n(); ++j)
            if (i != j) out.set(i, j, apply_endomorphism(first, second.image(i, j), cap));
    return out;
}

/// Image table of sigma_k^{sign} acting on A_n.
///
/// For sign +1 this is the defining table of the representation; for sign -1
/// it is the inverse table, obtained by solving the +1 rows for preimages
/// (verified by composition in the test suite).
inline GeneratorImageTable phi_generator(int k, int sign, int n) {
    if (k < 1 || k >= n) throw IndexError("sigma index " + std::to_string(k) + " out of range for B_" + std::to_string(n));
    GeneratorImageTable t = GeneratorImageTable::identity(n);
    auto a = [n](int i, int j) { return NcPoly::generator(i, j, n); };
    if (sign >= 0) {
        for (int i = 1; i <= n; ++i) {
            if (i == k || i == k + 1) continue;
            t.set(k, i, -a(k + 1, i) - a(k + 1, k) * a(k, i));
            t.set(i, k, -a(i, k + 1) - a(i, k) * a(k, k + 1));
            t.set(k + 1, i, a(k, i));
            t.set(i, k + 1, a(i, k));
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            if (i == k || i == k + 1) continue;
            t.set(k, i, a(k + 1, i));
            t.set(i, k, a(i, k + 1));
            t.set(k + 1, i, -a(k, i) - a(k, k + 1) * a(k + 1, i));
            t.set(i, k + 1, -a(i, k) - a(i, k + 1) * a(k + 1, k));
        }
    }
    t.set(k, k + 1, a(k + 1, k));
    t.set(k + 1, k, a(k, k + 1));
    return t;
}

/// phi_w for a braid word, with phi(w1 w2) = phi(w1) . phi(w2).
inline GeneratorImageTable phi(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    GeneratorImageTable t = GeneratorImageTable::identity(w.strands());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        int l = *it;
        t = compose_tables(phi_generator(std::abs(l), l > 0 ? +1 : -1, w.strands()), t, cap);
    }
    return t;
}

/// phi of the same word viewed in B_{n+1}; the extra puncture * is index n+1.
inline GeneratorImageTable phi_ext(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    return phi(w.widened(1), cap);
}

/// Matrix with entries in the free algebra. Products multiply entries in the
/// stated side order.
class NcMatrix {
public:
    NcMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static NcMatrix identity(int n) {
        NcMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = NcPoly::constant(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    NcPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }
    const NcPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }

    friend NcMatrix operator*(const NcMatrix& a, const NcMatrix& b) {
        if (a.cols_ != b.rows_) throw IndexError("matrix shape mismatch");
        NcMatrix out(a.rows_, b.cols_);
        for (int i = 1; i <= a.rows_; ++i)
            for (int j = 1; j <= b.cols_; ++j) {
                NcPoly s;
                for (int k = 1; k <= a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
                out.at(i, j) = std::move(s);
            }
        return out;
    }

    bool operator==(const NcMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_, cols_;
    std::vector<NcPoly> e_;
};

/// The matrix A = (a_{ij}) with a_{ii} = -2.
inline NcMatrix base_matrix(int n) {
    NcMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = NcPoly::generator(i, j, n);
    return m;
}

namespace detail {

// Splits phi_ext images into coefficient matrices. For Phi^L every monomial
// of phi_ext(a_{i*}) ends in exactly one factor a_{j*}; for Phi^R every
// monomial of phi_ext(a_{*j}) starts with a_{*i}. Anything else means the
// extension gained a malformed term and is reported as ExtractionError.
inline std::pair<NcMatrix, NcMatrix> phi_matrices(const GeneratorImageTable& ext, int n) {
    const int star = n + 1;
    NcMatrix left(n, n), right(n, n);
    for (int i = 1; i <= n; ++i) {
        for (const auto& [mono, c] : ext.image(i, star).terms()) {
            if (mono.empty() || mono.back().j != star || mono.back().i > n)
                throw ExtractionError("phi_ext(a_{i*}) has a term without trailing a_{j*}");
            for (std::size_t k = 0; k + 1 < mono.size(); ++k)
                if (mono[k].i == star || mono[k].j == star)
                    throw ExtractionError("phi_ext(a_{i*}) has an interior * factor");
            NcMonomial prefix(mono.begin(), mono.end() - 1);
            left.at(i, mono.back().i).add_term(std::move(prefix), c);
        }
    }
    for (int j = 1; j <= n; ++j) {
        for (const auto& [mono, c] : ext.image(star, j).terms()) {
            if (mono.empty() || mono.front().i != star || mono.front().j > n)
                throw ExtractionError("phi_ext(a_{*j}) has a term without leading a_{*i}");
            for (std::size_t k = 1; k < mono.size(); ++k)
                if (mono[k].i == star || mono[k].j == star)
                    throw ExtractionError("phi_ext(a_{*j}) has an interior * factor");
            NcMonomial suffix(mono.begin() + 1, mono.end());
            right.at(mono.front().j, j).add_term(std::move(suffix), c);
        }
    }
    return {std::move(left), std::move(right)};
}

} // namespace detail

inline NcMatrix phi_left(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    return detail::phi_matrices(phi_ext(w, cap), w.strands()).first;
}

inline NcMatrix phi_right(const BraidWord& w, std::optional<int> cap = std::nullopt) {
    return detail::phi_matrices(phi_ext(w, cap), w.strands()).second;
}

/// Whether (phi_w(a_{ij})) = Phi^L(w) . A . Phi^R(w) entrywise, with diagonal
/// entries of the left side taken as -2.
inline bool check_matrix_identity(const BraidWord& w) {
    const int n = w.strands();
    GeneratorImageTable t = phi(w);
    auto [left, right] = detail::phi_matrices(phi_ext(w), n);
    NcMatrix lhs(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) lhs.at(i, j) = (i == j) ? NcPoly::constant(-2) : t.image(i, j);
    return lhs == left * base_matrix(n) * right;
}

} // namespace cordring
