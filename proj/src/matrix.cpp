#include "hsalg/matrix.hpp"

namespace hsalg {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

long ExactMatrix::disc() const {
    long d = 0;
    for (const Scalar& s : e_) {
        if (s.disc() != 0) {
            if (d != 0 && d != s.disc()) throw FieldError("matrix mixes distinct quadratic fields");
            d = s.disc();
        }
    }
    return d;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    ExactMatrix c = a;
    for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    ExactMatrix c = a;
    for (size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
    return c;
}

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
    ExactMatrix m = *this;
    for (Scalar& s : m.e_) s *= c;
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if (int(v.size()) != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<int>* pivot_cols) {
    ExactMatrix r = m;
    int row = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int p = -1;
        for (int i = row; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
        Scalar inv = Scalar(1) / r.at(row, col);
        for (int j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return r;
}

int rank_of(const ExactMatrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return int(piv.size());
}

SolveResult solve_linear(const ExactMatrix& m) {
    std::vector<int> piv;
    ExactMatrix r = rref(m, &piv);
    SolveResult res;
    res.rank = int(piv.size());

    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;

    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(m.cols());
        v[j] = Scalar(1);
        for (size_t pi = 0; pi < piv.size(); ++pi) v[piv[pi]] = -r.at(int(pi), j);
        res.kernel.push_back(std::move(v));
    }
    for (int c : piv) {
        std::vector<Scalar> col(m.rows());
        for (int i = 0; i < m.rows(); ++i) col[i] = m.at(i, c);
        res.image.push_back(std::move(col));
    }
    return res;
}

std::optional<std::vector<Scalar>> solve_affine(const ExactMatrix& m,
                                                const std::vector<Scalar>& b) {
    if (int(b.size()) != m.rows()) throw DimensionError("solve_affine: rhs size mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> piv;
    ExactMatrix r = rref(aug, &piv);
    for (int c : piv)
        if (c == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (size_t pi = 0; pi < piv.size(); ++pi) x[piv[pi]] = r.at(int(pi), m.cols());
    return x;
}

Scalar det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    ExactMatrix a = m;
    int n = m.rows();
    Scalar result(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            result = -result;
        }
        result *= a.at(col, col);
        Scalar inv = Scalar(1) / a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col) * inv;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return result;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    int n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> piv;
    ExactMatrix r = rref(aug, &piv);
    if (int(piv.size()) < n || piv[n - 1] >= n) {
        for (int i = 0; i < n; ++i)
            if (i >= int(piv.size()) || piv[i] != i) return std::nullopt;
    }
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

ExactMatrix from_columns(int rows, const std::vector<std::vector<Scalar>>& cols) {
    ExactMatrix m(rows, int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (int(cols[j].size()) != rows) throw DimensionError("from_columns: ragged input");
        for (int i = 0; i < rows; ++i) m.at(i, int(j)) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> reduce_mod_rows(const ExactMatrix& rref_rows,
                                    const std::vector<int>& pivot_cols, std::vector<Scalar> v) {
    for (size_t r = 0; r < pivot_cols.size(); ++r) {
        int c = pivot_cols[r];
        if (v[c].is_zero()) continue;
        Scalar f = v[c];
        for (int j = 0; j < rref_rows.cols(); ++j) v[j] -= f * rref_rows.at(int(r), j);
    }
    return v;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return k;
}

}  // namespace hsalg
