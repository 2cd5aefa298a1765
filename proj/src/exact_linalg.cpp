#include "torbit/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace torbit {

namespace {

// Rational row-echelon machinery shared by kernel_basis and solve_affine.
using RatRows = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns the pivot column of each row.
std::vector<int> rref(RatRows& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i) {
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[lead], m[pivot]);
        const Rat inv = m[lead][col];
        for (int j = col; j < cols; ++j) m[lead][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= factor * m[lead][j];
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    return pivot_cols;
}

// Scales a rational vector to coprime integers, first nonzero entry positive.
std::vector<Rat> clear_to_primitive(const std::vector<Rat>& v) {
    Int den_lcm = 1;
    for (const Rat& x : v) den_lcm = lcm(den_lcm, denominator(x));
    std::vector<Int> ints;
    ints.reserve(v.size());
    Int g = 0;
    for (const Rat& x : v) {
        Int value = numerator(x) * (den_lcm / denominator(x));
        g = gcd(g, value);
        ints.push_back(std::move(value));
    }
    if (g == 0) g = 1;
    int flip = 1;
    for (const Int& x : ints) {
        if (x != 0) {
            flip = x.sign();
            break;
        }
    }
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (const Int& x : ints) out.emplace_back(flip * x / g);
    return out;
}

struct Pivot {
    int row = -1;
    int col = -1;
};

// Smallest-absolute-value nonzero entry of m in the block [from, rows) x
// [from, cols), ties broken by (row, col) lexicographic order.
Pivot find_pivot(const IntMatrix& m, int from) {
    Pivot best;
    Int best_abs = 0;
    for (int i = from; i < m.rows(); ++i) {
        for (int j = from; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (best.row < 0 || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    }
    return best;
}

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

std::size_t IntMatrix::check_dims(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != check_dims(rows, cols))
        throw std::invalid_argument("entry count does not match matrix dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged row lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<std::vector<Int>>& cols) {
    return from_rows(cols).transposed();
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

std::vector<Int> IntMatrix::col(int j) const {
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int swaps = 0;
    for (int step = 0; step < rows_; ++step) {
        int pivot = -1;
        for (int i = step; i < rows_; ++i) {
            if (m(i, step) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != step) {
            swap_rows(m, step, pivot);
            ++swaps;
        }
        for (int i = step + 1; i < rows_; ++i) {
            for (int j = step + 1; j < cols_; ++j)
                m(i, j) = (m(step, step) * m(i, j) - m(i, step) * m(step, j)) / prev;
            m(i, step) = 0;
        }
        prev = m(step, step);
    }
    return swaps % 2 == 0 ? prev : -prev;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << (*this)(i, j);
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[[]]";
    return os.str();
}

int rational_rank(const IntMatrix& m) {
    IntMatrix w = m;
    const int limit = std::min(w.rows(), w.cols());
    Int prev = 1;
    int rank = 0;
    while (rank < limit) {
        const Pivot p = find_pivot(w, rank);
        if (p.row < 0) break;
        swap_rows(w, rank, p.row);
        swap_cols(w, rank, p.col);
        for (int i = rank + 1; i < w.rows(); ++i) {
            for (int j = rank + 1; j < w.cols(); ++j)
                w(i, j) = (w(rank, rank) * w(i, j) - w(i, rank) * w(rank, j)) / prev;
            w(i, rank) = 0;
        }
        prev = w(rank, rank);
        ++rank;
    }
    return rank;
}

std::vector<RatVector> kernel_basis(const IntMatrix& m) {
    const int cols = m.cols();
    RatRows rows(m.rows(), std::vector<Rat>(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) rows[i][j] = m(i, j);
    const std::vector<int> pivots = rref(rows);

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -rows[p][free];
        basis.emplace_back(clear_to_primitive(v));
    }
    return basis;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const int limit = std::min(rows, cols);
    for (int t = 0; t < limit; ++t) {
        for (;;) {
            const Pivot p = find_pivot(d, t);
            if (p.row < 0) {
                // Remaining block is zero; diagonal entries from here stay 0.
                return res;
            }
            swap_rows(d, t, p.row);
            swap_rows(u, t, p.row);
            swap_cols(d, t, p.col);
            swap_cols(v, t, p.col);

            bool reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                const Int q = d(i, t) / d(t, t);
                for (int j = t; j < cols; ++j) d(i, j) -= q * d(t, j);
                for (int j = 0; j < rows; ++j) u(i, j) -= q * u(t, j);
                if (d(i, t) != 0) reduced = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                const Int q = d(t, j) / d(t, t);
                for (int i = t; i < rows; ++i) d(i, j) -= q * d(i, t);
                for (int i = 0; i < cols; ++i) v(i, j) -= q * v(i, t);
                if (d(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Pivot row and column are clear; enforce divisibility of the
            // trailing block before moving on.
            bool divides_all = true;
            for (int i = t + 1; i < rows && divides_all; ++i)
                for (int j = t + 1; j < cols && divides_all; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        for (int jj = 0; jj < cols; ++jj) d(t, jj) += d(i, jj);
                        for (int jj = 0; jj < rows; ++jj) u(t, jj) += u(i, jj);
                        divides_all = false;
                    }
            if (!divides_all) continue;
            break;
        }
        if (d(t, t) < 0) {
            for (int j = 0; j < cols; ++j) d(t, j) = -d(t, j);
            for (int j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return res;
}

std::vector<Int> SnfResult::diagonal() const {
    const int n = std::min(d.rows(), d.cols());
    std::vector<Int> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = d(i, i);
    return diag;
}

std::optional<RatVector> solve_affine(const IntMatrix& a, const RatVector& b,
                                      const std::vector<int>& fixed_zero) {
    if (b.dim() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    std::vector<bool> zeroed(a.cols(), false);
    for (int idx : fixed_zero) {
        if (idx < 0 || idx >= a.cols()) throw std::invalid_argument("fixed_zero index out of range");
        zeroed[idx] = true;
    }
    std::vector<int> kept;
    for (int j = 0; j < a.cols(); ++j)
        if (!zeroed[j]) kept.push_back(j);

    // Augmented system over the kept columns.
    RatRows rows(a.rows(), std::vector<Rat>(kept.size() + 1));
    for (int i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < kept.size(); ++j) rows[i][j] = a(i, kept[j]);
        rows[i][kept.size()] = b.entries[i];
    }
    const std::vector<int> pivots = rref(rows);
    if (!pivots.empty() && pivots.back() == static_cast<int>(kept.size()))
        return std::nullopt;  // pivot in the b column: inconsistent

    RatVector x(std::vector<Rat>(a.cols()));
    for (std::size_t p = 0; p < pivots.size(); ++p)
        x.entries[kept[pivots[p]]] = rows[p][kept.size()];
    return x;
}

}  // namespace torbit
