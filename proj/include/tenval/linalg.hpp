#ifndef TENVAL_LINALG_HPP
#define TENVAL_LINALG_HPP

// Exact dense vectors and square matrices over Rational, plus the two exact
// solvers the rest of the library needs: rank via fraction-free Bareiss
// elimination and least-residual solves for overdetermined systems.

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "rational.hpp"

namespace tenval {

class Vec {
public:
    Vec() = default;
    explicit Vec(int dim) : e_(static_cast<std::size_t>(dim)) {
        if (dim < 0) throw BadParameter("Vec: negative dimension");
    }
    Vec(std::initializer_list<Rational> xs) : e_(xs) {}
    explicit Vec(std::vector<Rational> xs) : e_(std::move(xs)) {}

    static Vec zero(int dim) { return Vec(dim); }
    static Vec unit(int dim, int i) {
        Vec v(dim);
        v[i] = 1;
        return v;
    }

    int dim() const { return static_cast<int>(e_.size()); }
    Rational& operator[](int i) { return e_.at(static_cast<std::size_t>(i)); }
    const Rational& operator[](int i) const { return e_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& entries() const { return e_; }

    bool operator==(const Vec& o) const { return e_ == o.e_; }
    bool operator!=(const Vec& o) const { return e_ != o.e_; }
    bool operator<(const Vec& o) const { return e_ < o.e_; } // lexicographic

    Vec operator+(const Vec& o) const {
        check_dim(o);
        Vec r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = e_[i] + o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        check_dim(o);
        Vec r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = e_[i] - o[i];
        return r;
    }
    Vec operator-() const {
        Vec r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = -e_[i];
        return r;
    }
    friend Vec operator*(const Rational& c, const Vec& v) {
        Vec r(v.dim());
        for (int i = 0; i < v.dim(); ++i) r[i] = c * v[i];
        return r;
    }

    Rational dot(const Vec& o) const {
        check_dim(o);
        Rational acc(0);
        for (int i = 0; i < dim(); ++i) acc += e_[i] * o[i];
        return acc;
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x == 0; });
    }

private:
    void check_dim(const Vec& o) const {
        if (dim() != o.dim()) throw DimensionMismatch("Vec: dimension mismatch");
    }
    std::vector<Rational> e_;
};

// Row-major square matrix acting on column vectors.
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 0) throw BadParameter("Mat: negative dimension");
    }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat diag(const std::vector<Rational>& d) {
        Mat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }
    // Planar shears: shear_upper(z) = [[1,z],[0,1]] sends e2 to z*e1 + e2,
    // shear_lower(z) = [[1,0],[z,1]] sends e1 to e1 + z*e2.
    static Mat shear_upper(const Rational& z) {
        Mat m = identity(2);
        m.at(0, 1) = z;
        return m;
    }
    static Mat shear_lower(const Rational& z) {
        Mat m = identity(2);
        m.at(1, 0) = z;
        return m;
    }
    // Quarter turn: e1 -> e2, e2 -> -e1.
    static Mat rotation_quarter() {
        Mat m(2);
        m.at(0, 1) = -1;
        m.at(1, 0) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows) {
        Mat m(static_cast<int>(rows.size()));
        for (int r = 0; r < m.n_; ++r) {
            if (rows[static_cast<std::size_t>(r)].dim() != m.n_)
                throw DimensionMismatch("Mat::from_rows: ragged rows");
            for (int c = 0; c < m.n_; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][c];
        }
        return m;
    }
    static Mat from_columns(const std::vector<Vec>& cols) {
        return from_rows(cols).transpose();
    }

    int dim() const { return n_; }
    Rational& at(int r, int c) { return a_.at(idx(r, c)); }
    const Rational& at(int r, int c) const { return a_.at(idx(r, c)); }

    bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    friend Mat operator*(const Rational& c, const Mat& m) {
        Mat r(m.n_);
        for (int i = 0; i < m.n_; ++i)
            for (int j = 0; j < m.n_; ++j) r.at(i, j) = c * m.at(i, j);
        return r;
    }

    Mat transpose() const {
        Mat t(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (n_ != o.n_) throw DimensionMismatch("Mat: dimension mismatch");
        Mat p(n_);
        for (int r = 0; r < n_; ++r)
            for (int k = 0; k < n_; ++k) {
                if (at(r, k) == 0) continue;
                for (int c = 0; c < n_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
            }
        return p;
    }

    Vec apply(const Vec& v) const {
        if (v.dim() != n_) throw DimensionMismatch("Mat: dimension mismatch");
        Vec r(n_);
        for (int i = 0; i < n_; ++i) {
            Rational acc(0);
            for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    Rational det() const {
        Mat m = *this;
        Rational d(1);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (m.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Rational(0);
            if (piv != col) {
                for (int c = 0; c < n_; ++c) std::swap(m.at(piv, c), m.at(col, c));
                d = -d;
            }
            d *= m.at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                if (m.at(r, col) == 0) continue;
                Rational f = m.at(r, col) / m.at(col, col);
                for (int c = col; c < n_; ++c) m.at(r, c) -= f * m.at(col, c);
            }
        }
        return d;
    }

    Mat inverse() const {
        Mat m = *this;
        Mat inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (m.at(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw SingularMatrix("Mat::inverse: singular matrix");
            if (piv != col)
                for (int c = 0; c < n_; ++c) {
                    std::swap(m.at(piv, c), m.at(col, c));
                    std::swap(inv.at(piv, c), inv.at(col, c));
                }
            Rational p = m.at(col, col);
            for (int c = 0; c < n_; ++c) {
                m.at(col, c) /= p;
                inv.at(col, c) /= p;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || m.at(r, col) == 0) continue;
                Rational f = m.at(r, col);
                for (int c = 0; c < n_; ++c) {
                    m.at(r, c) -= f * m.at(col, c);
                    inv.at(r, c) -= f * inv.at(col, c);
                }
            }
        }
        return inv;
    }

    Mat inverse_transpose() const { return inverse().transpose(); }

private:
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= n_ || c < 0 || c >= n_) throw BadParameter("Mat: index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c);
    }
    int n_ = 0;
    std::vector<Rational> a_;
};

// Rank of an arbitrary rectangular rational matrix, exact. Rows are cleared
// to integers, then reduced by fraction-free Bareiss elimination.
inline int exact_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (auto& row : rows) {
        if (row.size() != cols) throw DimensionMismatch("exact_rank: ragged rows");
        Int lcm(1);
        for (const auto& x : row) lcm = boost::multiprecision::lcm(lcm, den(x));
        std::vector<Int> irow;
        irow.reserve(cols);
        for (const auto& x : row) irow.push_back(num(x) * (lcm / den(x)));
        m.push_back(std::move(irow));
    }
    std::size_t nrows = m.size();
    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == nrows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

struct LinearSolve {
    std::vector<Rational> solution;  // one entry per unknown
    std::vector<Rational> residual;  // A x - b, one entry per equation
    bool residual_zero = false;
};

// Solves an overdetermined consistent-or-not system A x = b (rows >= cols)
// by Gaussian elimination on the full system; throws RankDeficient when the
// coefficient matrix has rank below the number of unknowns. The returned
// residual is exact, so callers can decide what a nonzero residual means.
inline LinearSolve solve_least_residual(const std::vector<std::vector<Rational>>& a,
                                        const std::vector<Rational>& b) {
    std::size_t rows = a.size();
    if (rows == 0 || rows != b.size())
        throw DimensionMismatch("solve_least_residual: shape mismatch");
    std::size_t cols = a[0].size();
    if (cols == 0 || rows < cols) throw RankDeficient("solve_least_residual: too few equations");

    std::vector<std::vector<Rational>> m(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols) throw DimensionMismatch("solve_least_residual: ragged rows");
        m[r] = a[r];
        m[r].push_back(b[r]);
    }

    std::vector<std::size_t> pivot_row(cols);
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = lead; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) throw RankDeficient("solve_least_residual: rank-deficient system");
        std::swap(m[lead], m[piv]);
        for (std::size_t r = lead + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[lead][col];
            for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[lead][c];
        }
        pivot_row[col] = lead;
        ++lead;
    }

    std::vector<Rational> x(cols);
    for (std::size_t ci = cols; ci-- > 0;) {
        std::size_t r = pivot_row[ci];
        Rational acc = m[r][cols];
        for (std::size_t c = ci + 1; c < cols; ++c) acc -= m[r][c] * x[c];
        x[ci] = acc / m[r][ci];
    }

    LinearSolve out;
    out.solution = x;
    out.residual.resize(rows);
    out.residual_zero = true;
    for (std::size_t r = 0; r < rows; ++r) {
        Rational acc(0);
        for (std::size_t c = 0; c < cols; ++c) acc += a[r][c] * x[c];
        out.residual[r] = acc - b[r];
        if (out.residual[r] != 0) out.residual_zero = false;
    }
    return out;
}

} // namespace tenval

#endif
