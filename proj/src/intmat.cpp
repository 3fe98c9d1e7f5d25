#include "ckdual/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ckdual {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> entries)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
    for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = entries[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: length mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
    IntVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("IntMatrix::hstack: row mismatch");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

// Elementary operations mirrored into the transform and its inverse.
// Row op on (D, S): also column op on S_inv with the inverse coefficient.
struct RowOps {
    IntMatrix* M;
    IntMatrix* S;
    IntMatrix* S_inv;

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < M->cols(); ++j) std::swap((*M)(a, j), (*M)(b, j));
        for (std::size_t j = 0; j < S->cols(); ++j) std::swap((*S)(a, j), (*S)(b, j));
        if (S_inv)
            for (std::size_t i = 0; i < S_inv->rows(); ++i) std::swap((*S_inv)(i, a), (*S_inv)(i, b));
    }
    // row a += c * row b
    void add(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < M->cols(); ++j) (*M)(a, j) += c * (*M)(b, j);
        for (std::size_t j = 0; j < S->cols(); ++j) (*S)(a, j) += c * (*S)(b, j);
        if (S_inv)
            for (std::size_t i = 0; i < S_inv->rows(); ++i) (*S_inv)(i, b) -= c * (*S_inv)(i, a);
    }
    void negate(std::size_t a) {
        for (std::size_t j = 0; j < M->cols(); ++j) (*M)(a, j) = -(*M)(a, j);
        for (std::size_t j = 0; j < S->cols(); ++j) (*S)(a, j) = -(*S)(a, j);
        if (S_inv)
            for (std::size_t i = 0; i < S_inv->rows(); ++i) (*S_inv)(i, a) = -(*S_inv)(i, a);
    }
};

struct ColOps {
    IntMatrix* M;
    IntMatrix* T;
    IntMatrix* T_inv;

    void swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < M->rows(); ++i) std::swap((*M)(i, a), (*M)(i, b));
        for (std::size_t i = 0; i < T->rows(); ++i) std::swap((*T)(i, a), (*T)(i, b));
        if (T_inv)
            for (std::size_t j = 0; j < T_inv->cols(); ++j) std::swap((*T_inv)(a, j), (*T_inv)(b, j));
    }
    // col a += c * col b
    void add(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < M->rows(); ++i) (*M)(i, a) += c * (*M)(i, b);
        for (std::size_t i = 0; i < T->rows(); ++i) (*T)(i, a) += c * (*T)(i, b);
        if (T_inv)
            for (std::size_t j = 0; j < T_inv->cols(); ++j) (*T_inv)(b, j) -= c * (*T_inv)(a, j);
    }
    void negate(std::size_t a) {
        for (std::size_t i = 0; i < M->rows(); ++i) (*M)(i, a) = -(*M)(i, a);
        for (std::size_t i = 0; i < T->rows(); ++i) (*T)(i, a) = -(*T)(i, a);
        if (T_inv)
            for (std::size_t j = 0; j < T_inv->cols(); ++j) (*T_inv)(a, j) = -(*T_inv)(a, j);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithDecomposition snf(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    SmithDecomposition dec;
    dec.source_rows = m;
    dec.source_cols = n;
    dec.D = M;
    dec.S = IntMatrix::identity(m);
    dec.S_inv = IntMatrix::identity(m);
    dec.T = IntMatrix::identity(n);
    dec.T_inv = IntMatrix::identity(n);

    RowOps rows{&dec.D, &dec.S, &dec.S_inv};
    ColOps cols{&dec.D, &dec.T, &dec.T_inv};
    IntMatrix& D = dec.D;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // pivot on the minimum-absolute-value nonzero entry of the trailing block
        for (;;) {
            std::size_t pr = t, pc = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0) {
                        Int a = abs_int(D(i, j));
                        if (!found || a < best) {
                            found = true;
                            best = a;
                            pr = i;
                            pc = j;
                        }
                    }
            if (!found) {
                t = steps;  // trailing block is zero; done
                break;
            }
            rows.swap(t, pr);
            cols.swap(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (D(i, t) != 0) {
                    Int q = D(i, t) / D(t, t);  // truncated; remainder smaller than pivot
                    rows.add(i, t, -q);
                    if (D(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(t, j) != 0) {
                    Int q = D(t, j) / D(t, t);
                    cols.add(j, t, -q);
                    if (D(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // pivot isolated; enforce divisibility of the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        rows.add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) continue;

            if (D(t, t) < 0) rows.negate(t);
            break;
        }
        if (t >= steps) break;
    }
    return dec;
}

HermiteForm hnf_rows(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    HermiteForm form;
    form.H = M;
    form.transform = IntMatrix::identity(m);
    form.transform_inv = IntMatrix::identity(m);
    RowOps rows{&form.H, &form.transform, &form.transform_inv};
    IntMatrix& H = form.H;

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // reduce column c below row r to a single nonzero entry at (r, c)
        for (;;) {
            std::size_t pivot = m;
            for (std::size_t i = r; i < m; ++i)
                if (H(i, c) != 0 && (pivot == m || abs_int(H(i, c)) < abs_int(H(pivot, c)))) pivot = i;
            if (pivot == m) break;
            rows.swap(r, pivot);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i)
                if (H(i, c) != 0) {
                    Int q = H(i, c) / H(r, c);
                    rows.add(i, r, -q);
                    if (H(i, c) != 0) clean = false;
                }
            if (clean) break;
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0) rows.negate(r);
        // entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i)
            if (H(i, c) != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
                rows.add(i, r, -q);
            }
        ++r;
    }
    return form;
}

IntMatrix kernel_basis(const SmithDecomposition& dec) {
    const std::size_t n = dec.source_cols;
    const std::size_t rank = dec.rank();
    IntMatrix basis(n, n - rank);
    for (std::size_t j = rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, j - rank) = dec.T(i, j);
    return basis;
}

IntMatrix kernel_basis(const IntMatrix& M) { return kernel_basis(snf(M)); }

std::optional<IntVector> solve_in_column_lattice(const SmithDecomposition& dec, const IntVector& b) {
    if (b.size() != dec.source_rows)
        throw std::invalid_argument("solve_in_column_lattice: dimension mismatch");
    const std::size_t m = dec.source_rows;
    const std::size_t n = dec.source_cols;
    IntVector c = dec.S.apply(b);
    IntVector y(n);
    const std::size_t steps = std::min(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < steps && dec.D(i, i) != 0) {
            if (c[i] % dec.D(i, i) != 0) return std::nullopt;
            y[i] = c[i] / dec.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return dec.T.apply(y);
}

std::optional<IntVector> solve_in_column_lattice(const IntMatrix& M, const IntVector& b) {
    return solve_in_column_lattice(snf(M), b);
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& M) {
    if (M.rows() != M.cols()) return false;
    Int d = determinant(M);
    return d == 1 || d == -1;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: length mismatch");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVector negate(const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

IntVector scale(const Int& c, const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_zero_vector(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

}  // namespace ckdual
