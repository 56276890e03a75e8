#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <string>
#include <vector>

namespace cordring {

/// Dense matrix over Z with exact arithmetic.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw IndexError("matrix shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (int i = 1; i <= a.rows_; ++i)
            for (int k = 1; k <= a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 1; j <= b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw IndexError("vector length mismatch");
        std::vector<BigInt> out(static_cast<std::size_t>(rows_));
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) out[static_cast<std::size_t>(i - 1)] += at(i, j) * v[static_cast<std::size_t>(j - 1)];
        return out;
    }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    /// Fraction-free determinant (Bareiss); square matrices only.
    BigInt det() const {
        if (rows_ != cols_) throw IndexError("determinant of a non-square matrix");
        IntMatrix m = *this;
        BigInt prev = 1;
        int sign = 1;
        for (int k = 1; k < rows_; ++k) {
            if (m.at(k, k) == 0) {
                int swap_row = 0;
                for (int i = k + 1; i <= rows_; ++i)
                    if (m.at(i, k) != 0) {
                        swap_row = i;
                        break;
                    }
                if (swap_row == 0) return 0;
                for (int j = 1; j <= cols_; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
                sign = -sign;
            }
            for (int i = k + 1; i <= rows_; ++i)
                for (int j = k + 1; j <= cols_; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        return sign > 0 ? m.at(rows_, rows_) : -m.at(rows_, rows_);
    }

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

/// Result of Smith normal form: U * M * V = D with U, V unimodular and the
/// nonzero diagonal entries forming a divisibility chain.
struct SmithForm {
    std::vector<BigInt> diagonal; // length min(rows, cols), trailing zeros kept
    IntMatrix U;
    IntMatrix V;
    int rank = 0; // number of nonzero diagonal entries
};

inline SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const int rows = m.rows(), cols = m.cols();
    SmithForm out{std::vector<BigInt>(), IntMatrix::identity(rows), IntMatrix::identity(cols), 0};

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 1; j <= cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int j = 1; j <= rows; ++j) std::swap(out.U.at(a, j), out.U.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 1; i <= rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (int i = 1; i <= cols; ++i) std::swap(out.V.at(i, a), out.V.at(i, b));
    };
    auto add_row = [&](int dst, int src, const BigInt& k) { // row dst += k * row src
        for (int j = 1; j <= cols; ++j) m.at(dst, j) += k * m.at(src, j);
        for (int j = 1; j <= rows; ++j) out.U.at(dst, j) += k * out.U.at(src, j);
    };
    auto add_col = [&](int dst, int src, const BigInt& k) {
        for (int i = 1; i <= rows; ++i) m.at(i, dst) += k * m.at(i, src);
        for (int i = 1; i <= cols; ++i) out.V.at(i, dst) += k * out.V.at(i, src);
    };
    auto negate_row = [&](int r) {
        for (int j = 1; j <= cols; ++j) m.at(r, j) = -m.at(r, j);
        for (int j = 1; j <= rows; ++j) out.U.at(r, j) = -out.U.at(r, j);
    };

    // Balanced quotient: a - q*d lands in (-d/2, d/2], d > 0. Keeps the
    // multipliers small, which is what stops entry swell.
    auto balanced_quot = [](const BigInt& a, const BigInt& d) {
        BigInt q = floor_div(a, d);
        if (2 * (a - q * d) > d) ++q;
        return q;
    };

    const int steps = std::min(rows, cols);
    for (int t = 1; t <= steps; ++t) {
        bool block_empty = false;
        while (true) {
            // re-select the globally smallest pivot in the trailing block;
            // the re-selection after every sweep is the anti-swell measure
            int pi = 0, pj = 0;
            BigInt best = 0;
            for (int i = t; i <= rows; ++i)
                for (int j = t; j <= cols; ++j) {
                    if (m.at(i, j) == 0) continue;
                    BigInt mag = big_abs(m.at(i, j));
                    if (pi == 0 || mag < best) {
                        pi = i, pj = j, best = mag;
                    }
                }
            if (pi == 0) {
                block_empty = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            if (m.at(t, t) < 0) negate_row(t);
            bool dirty = false;
            for (int i = t + 1; i <= rows; ++i) {
                if (m.at(i, t) == 0) continue;
                BigInt q = balanced_quot(m.at(i, t), m.at(t, t));
                if (q != 0) add_row(i, t, -q);
                if (m.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j <= cols; ++j) {
                if (m.at(t, j) == 0) continue;
                BigInt q = balanced_quot(m.at(t, j), m.at(t, t));
                if (q != 0) add_col(j, t, -q);
                if (m.at(t, j) != 0) dirty = true;
            }
            if (!dirty) break; // row and column t are clear
        }
        if (block_empty) break;
    }

    // Enforce the divisibility chain d1 | d2 | ... (zeros already trail).
    for (int t = 1; t <= steps; ++t) {
        for (int s = t + 1; s <= steps; ++s) {
            if (m.at(t, t) == 0 || m.at(s, s) == 0) continue;
            if (m.at(s, s) % m.at(t, t) == 0) continue;
            // standard 2x2 fix: gcd into position t, lcm into position s
            add_col(t, s, 1);
            bool clean = false;
            while (!clean) {
                clean = true;
                if (m.at(s, t) != 0) {
                    BigInt q = floor_div(m.at(s, t), m.at(t, t));
                    add_row(s, t, -q);
                    if (m.at(s, t) != 0) {
                        swap_rows(t, s);
                        clean = false;
                        continue;
                    }
                }
                if (m.at(t, s) != 0) {
                    BigInt q = floor_div(m.at(t, s), m.at(t, t));
                    add_col(s, t, -q);
                    if (m.at(t, s) != 0) {
                        swap_cols(t, s);
                        clean = false;
                    }
                }
            }
            if (m.at(t, t) < 0) negate_row(t);
            if (m.at(s, s) < 0) negate_row(s);
        }
    }

    for (int t = 1; t <= steps; ++t) {
        out.diagonal.push_back(m.at(t, t));
        if (m.at(t, t) != 0) ++out.rank;
    }
    return out;
}

} // namespace cordring
