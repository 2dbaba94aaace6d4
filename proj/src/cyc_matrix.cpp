#include "edc/cyc_matrix.hpp"

#include <sstream>

namespace edc {

CycMat::CycMat(unsigned conductor, int rows, int cols)
    : n_(conductor), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols, CycNum::zero(conductor)) {
    if (rows < 1 || cols < 1) throw linalg_error("matrix dimensions must be positive");
}

CycMat CycMat::identity(unsigned conductor, int n) {
    return scalar(conductor, n, CycNum::one(conductor));
}

CycMat CycMat::scalar(unsigned conductor, int n, const CycNum& c) {
    CycMat m(conductor, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

CycMat operator*(const CycMat& a, const CycMat& b) {
    if (a.n_ != b.n_) throw conductor_error("conductor mismatch in matrix product");
    if (a.cols_ != b.rows_) throw linalg_error("shape mismatch in matrix product");
    CycMat c(a.n_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const CycNum& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const CycNum& bv = b.at(k, j);
                if (bv.is_zero()) continue;
                c.at(i, j) += av * bv;
            }
        }
    return c;
}

CycMat operator+(const CycMat& a, const CycMat& b) {
    if (a.n_ != b.n_) throw conductor_error("conductor mismatch in matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw linalg_error("shape mismatch in sum");
    CycMat c = a;
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
    return c;
}

CycMat operator-(const CycMat& a, const CycMat& b) {
    if (a.n_ != b.n_) throw conductor_error("conductor mismatch in matrix difference");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw linalg_error("shape mismatch");
    CycMat c = a;
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
    return c;
}

CycMat operator*(const CycNum& c, const CycMat& m) {
    CycMat r = m;
    for (CycNum& x : r.e_) x *= c;
    return r;
}

CycMat operator*(const Rat& c, const CycMat& m) {
    CycMat r = m;
    for (CycNum& x : r.e_) x = c * x;
    return r;
}

CycMat CycMat::operator-() const {
    CycMat r = *this;
    for (CycNum& x : r.e_) x = -x;
    return r;
}

CycMat CycMat::transpose() const {
    CycMat r(n_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool CycMat::is_zero() const {
    for (const CycNum& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycMat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(n_, rows_);
}

bool CycMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::optional<CycNum> CycMat::scalar_value() const {
    if (rows_ != cols_) return std::nullopt;
    const CycNum& d = at(0, 0);
    if (d.is_zero()) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return std::nullopt;
        }
    return d;
}

CycNum CycMat::trace() const {
    if (rows_ != cols_) throw linalg_error("trace of non-square matrix");
    CycNum t = CycNum::zero(n_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<int> rref_in_place(std::vector<std::vector<CycNum>>& rows, unsigned conductor) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        CycNum inv = rows[r][col].inverse();
        for (std::size_t j = col; j < ncols; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] *= inv;
        rows[r][col] = CycNum::one(conductor);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            CycNum f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                if (rows[r][j].is_zero()) continue;
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    rows.resize(pivots.size(), std::vector<CycNum>());
    return pivots;
}

int CycMat::rank() const {
    std::vector<std::vector<CycNum>> rows(rows_);
    for (int i = 0; i < rows_; ++i) {
        rows[i].reserve(cols_);
        for (int j = 0; j < cols_; ++j) rows[i].push_back(at(i, j));
    }
    return static_cast<int>(rref_in_place(rows, n_).size());
}

std::optional<CycMat> CycMat::inverse() const {
    if (rows_ != cols_) throw linalg_error("inverse of non-square matrix");
    int n = rows_;
    std::vector<std::vector<CycNum>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].reserve(2 * n);
        for (int j = 0; j < n; ++j) rows[i].push_back(at(i, j));
        for (int j = 0; j < n; ++j)
            rows[i].push_back(i == j ? CycNum::one(n_) : CycNum::zero(n_));
    }
    std::vector<int> pivots = rref_in_place(rows, n_);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    CycMat inv(n_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rows[i][static_cast<std::size_t>(n) + j];
    return inv;
}

CycMat CycMat::lift(unsigned N) const {
    CycMat r(N, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).lift(N);
    return r;
}

void CycMat::encode_into(std::vector<std::uint8_t>& out) const {
    for (const CycNum& x : e_) x.encode_into(out);
}

CycMat CycMat::decode(unsigned conductor, int rows, int cols,
                      const std::uint8_t* data, std::size_t size) {
    CycMat m(conductor, rows, cols);
    const std::uint8_t* p = data;
    const std::uint8_t* end = data + size;
    for (CycNum& x : m.e_) x = CycNum::decode_from(conductor, p, end);
    if (p != end) throw linalg_error("trailing bytes in matrix encoding");
    return m;
}

std::string CycMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

Subspace::Subspace(unsigned conductor, int ambient, std::vector<std::vector<CycNum>> spanning)
    : n_(conductor), ambient_(ambient) {
    for (const auto& v : spanning)
        if (static_cast<int>(v.size()) != ambient)
            throw linalg_error("spanning vector has wrong length");
    rref_in_place(spanning, conductor);
    basis_ = std::move(spanning);
}

Subspace Subspace::zero(unsigned conductor, int ambient) {
    return Subspace(conductor, ambient, {});
}

Subspace Subspace::full(unsigned conductor, int ambient) {
    std::vector<std::vector<CycNum>> rows(ambient,
                                          std::vector<CycNum>(ambient, CycNum::zero(conductor)));
    for (int i = 0; i < ambient; ++i) rows[i][i] = CycNum::one(conductor);
    return Subspace(conductor, ambient, std::move(rows));
}

CycMat Subspace::basis_matrix() const {
    if (basis_.empty()) throw linalg_error("basis matrix of the zero subspace");
    CycMat m(n_, dim(), ambient_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < ambient_; ++j) m.at(i, j) = basis_[i][j];
    return m;
}

bool Subspace::contains(const std::vector<CycNum>& v) const {
    std::vector<std::vector<CycNum>> rows = basis_;
    rows.push_back(v);
    Subspace bigger(n_, ambient_, std::move(rows));
    return bigger.dim() == dim();
}

Subspace kernel(const CycMat& m) {
    std::vector<std::vector<CycNum>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    }
    std::vector<int> pivots = rref_in_place(rows, m.conductor());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycNum>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycNum> v(m.cols(), CycNum::zero(m.conductor()));
        v[free] = CycNum::one(m.conductor());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return Subspace(m.conductor(), m.cols(), std::move(basis));
}

Subspace image(const CycMat& m) {
    std::vector<std::vector<CycNum>> rows(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        rows[j].reserve(m.rows());
        for (int i = 0; i < m.rows(); ++i) rows[j].push_back(m.at(i, j));
    }
    return Subspace(m.conductor(), m.rows(), std::move(rows));
}

CycMat restrict_form(const CycMat& gram, const Subspace& s) {
    if (gram.rows() != gram.cols() || gram.rows() != s.ambient_dim())
        throw linalg_error("gram matrix size does not match subspace ambient dimension");
    if (!gram.is_symmetric()) throw linalg_error("gram matrix must be symmetric");
    if (s.dim() == 0) throw linalg_error("restriction to the zero subspace");
    CycMat b = s.basis_matrix();
    return b * gram * b.transpose();
}

std::vector<CycNum> apply_matrix(const CycMat& m, const std::vector<CycNum>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw linalg_error("vector length mismatch");
    std::vector<CycNum> out(m.rows(), CycNum::zero(m.conductor()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += m.at(i, j) * v[j];
        }
    return out;
}

} // namespace edc
