#include "grmod/matrix.hpp"

#include <sstream>

namespace grmod {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack width mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack height mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
    Matrix r(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) r.set_row(i, rows[i]);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Rref rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // first nonzero entry in column c at or below row r
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix kept(a.field(), r, a.cols());
    for (std::size_t i = 0; i < r; ++i) kept.set_row(i, a.row(i));
    return Rref{std::move(kept), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Rref R = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : R.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (std::size_t i = 0; i < R.pivots.size(); ++i)
            v[R.pivots[i]] = -R.mat.at(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
    Matrix aug = Matrix::hstack(m, Matrix::from_rows(m.field(), b.size(), {b}).transpose());
    Rref R = rref(aug);
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < R.pivots.size(); ++i) {
        if (R.pivots[i] == m.cols()) return std::nullopt; // pivot in the rhs column
        x[R.pivots[i]] = R.mat.at(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
    Rref R = rref(aug);
    if (R.pivots.size() != m.rows()) return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (R.pivots[i] != i) return std::nullopt;
    Matrix inv(m.field(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = R.mat.at(i, m.rows() + j);
    return inv;
}

bool invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

RowSpace::RowSpace(const Field& f, std::size_t ambient)
    : basis{Matrix(f, 0, ambient), {}}, field_(f), ambient_(ambient) {}

RowSpace::RowSpace(const Field& f, std::size_t ambient, const std::vector<std::vector<Scalar>>& rows)
    : RowSpace(f, ambient) {
    basis = rref(Matrix::from_rows(f, ambient, rows));
}

std::vector<Scalar> RowSpace::reduce(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
        const Scalar& c = w[basis.pivots[i]];
        if (c.is_zero()) continue;
        Scalar f = c; // pivot entries are 1
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis.mat.at(i, j);
    }
    return w;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
    for (const auto& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

bool RowSpace::add(const std::vector<Scalar>& v) {
    std::vector<Scalar> w = reduce(v);
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!w[j].is_zero()) { lead = j; break; }
    if (lead == ambient_) return false;
    Matrix stacked = Matrix::vstack(basis.mat, Matrix::from_rows(field_, ambient_, {w}));
    basis = rref(stacked);
    return true;
}

SubspaceQuotient subspace_quotient(const Field& f, std::size_t ambient_dim,
                                   const std::vector<std::vector<Scalar>>& sub) {
    Rref R = rref(Matrix::from_rows(f, ambient_dim, sub));
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : R.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free.push_back(c);

    std::size_t q = free.size();
    // projection = (reduce modulo the subspace) then read the free coordinates
    Matrix proj(f, ambient_dim, q);
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        std::vector<Scalar> e(ambient_dim, Scalar::zero(f));
        e[c] = Scalar::one(f);
        // eliminate pivot coordinates
        for (std::size_t i = 0; i < R.pivots.size(); ++i) {
            const Scalar& coef = e[R.pivots[i]];
            if (coef.is_zero()) continue;
            Scalar co = coef;
            for (std::size_t j = 0; j < ambient_dim; ++j) e[j] -= co * R.mat.at(i, j);
        }
        for (std::size_t k = 0; k < q; ++k) proj.at(c, k) = e[free[k]];
    }
    Matrix sec(f, q, ambient_dim);
    for (std::size_t k = 0; k < q; ++k) sec.at(k, free[k]) = Scalar::one(f);
    return SubspaceQuotient{std::move(proj), std::move(sec), q};
}

std::optional<std::vector<Scalar>> coordinates_in_rowspace(const Matrix& basis,
                                                           const std::vector<Scalar>& v) {
    // solve x * basis = v, i.e. basis^T x^T = v^T
    auto x = solve(basis.transpose(), v);
    return x;
}

std::optional<Matrix> coordinates_rows_in_rowspace(const Matrix& basis, const Matrix& rows) {
    const Field& f = basis.field();
    std::size_t k = basis.rows();
    if (rows.rows() == 0) return Matrix(f, 0, k);
    Matrix aug = Matrix::hstack(basis.transpose(), rows.transpose());
    Rref R = rref(aug);
    for (auto p : R.pivots)
        if (p >= k) return std::nullopt; // some row lies outside the span
    Matrix C(f, rows.rows(), k);
    for (std::size_t i = 0; i < R.pivots.size(); ++i)
        for (std::size_t j = 0; j < rows.rows(); ++j) C.at(j, R.pivots[i]) = R.mat.at(i, k + j);
    return C;
}

} // namespace grmod
