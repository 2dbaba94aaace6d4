#include "edc/fq_matrix.hpp"

#include <sstream>

namespace edc {

FqMat::FqMat(FieldId fid, int rows, int cols)
    : fid_(fid), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) throw field_error("matrix dimensions must be positive");
}

FqMat FqMat::identity(FieldId fid, int n) {
    FqMat m(fid, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FqMat FqMat::from_values(FieldId fid, int rows, int cols, const std::vector<int>& vals) {
    if (vals.size() != static_cast<std::size_t>(rows) * cols)
        throw field_error("value count does not match matrix shape");
    FqMat m(fid, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = vals[static_cast<std::size_t>(i) * cols + j];
            if (fid.deg == 1) {
                int r = v % static_cast<int>(fid.p);
                if (r < 0) r += fid.p;
                m.set(i, j, static_cast<unsigned>(r));
            } else {
                if (v < 0 || static_cast<unsigned>(v) >= fid.q())
                    throw field_error("extension field entry out of range");
                m.set(i, j, static_cast<unsigned>(v));
            }
        }
    return m;
}

void FqMat::set(int i, int j, unsigned v) {
    if (v >= fid_.q()) throw field_error("entry out of range");
    e_[static_cast<std::size_t>(i) * cols_ + j] = static_cast<std::uint8_t>(v);
}

FqMat operator*(const FqMat& a, const FqMat& b) {
    if (a.fid_ != b.fid_) throw field_error("field mismatch in matrix product");
    if (a.cols_ != b.rows_) throw field_error("shape mismatch in matrix product");
    FqMat c(a.fid_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            unsigned av = a.at(i, k);
            if (!av) continue;
            FqElem ae(a.fid_, av);
            for (int j = 0; j < b.cols_; ++j) {
                unsigned bv = b.at(k, j);
                if (!bv) continue;
                FqElem sum = FqElem(a.fid_, c.at(i, j)) + ae * FqElem(a.fid_, bv);
                c.set(i, j, sum.value());
            }
        }
    return c;
}

FqMat FqMat::operator-() const {
    FqMat m(fid_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(i, j, (-elem(i, j)).value());
    return m;
}

FqMat FqMat::transpose() const {
    FqMat m(fid_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

std::optional<FqMat> FqMat::inverse() const {
    if (rows_ != cols_) throw field_error("inverse of non-square matrix");
    int n = rows_;
    FqMat a = *this;
    FqMat inv = identity(fid_, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col)) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.e_[static_cast<std::size_t>(pivot) * n + j],
                          a.e_[static_cast<std::size_t>(col) * n + j]);
                std::swap(inv.e_[static_cast<std::size_t>(pivot) * n + j],
                          inv.e_[static_cast<std::size_t>(col) * n + j]);
            }
        }
        FqElem pinv = a.elem(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.set(col, j, (a.elem(col, j) * pinv).value());
            inv.set(col, j, (inv.elem(col, j) * pinv).value());
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || !a.at(r, col)) continue;
            FqElem f = a.elem(r, col);
            for (int j = 0; j < n; ++j) {
                a.set(r, j, (a.elem(r, j) - f * a.elem(col, j)).value());
                inv.set(r, j, (inv.elem(r, j) - f * inv.elem(col, j)).value());
            }
        }
    }
    return inv;
}

bool FqMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool FqMat::is_scalar() const {
    if (rows_ != cols_) return false;
    unsigned d = at(0, 0);
    if (!d) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? d : 0u)) return false;
    return true;
}

std::uint64_t FqMat::pack() const {
    unsigned q = fid_.q();
    // Require q^(rows*cols) <= 2^64.
    long double capacity = 1.0L;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        capacity *= q;
        if (capacity > 1.8e19L) throw field_error("matrix too large to pack");
    }
    std::uint64_t key = 0;
    for (std::uint8_t v : e_) key = key * q + v;
    return key;
}

FqMat FqMat::unpack(FieldId fid, int rows, int cols, std::uint64_t key) {
    FqMat m(fid, rows, cols);
    unsigned q = fid.q();
    for (std::size_t i = m.e_.size(); i-- > 0;) {
        m.e_[i] = static_cast<std::uint8_t>(key % q);
        key /= q;
    }
    return m;
}

std::string FqMat::digits() const {
    std::string s;
    s.reserve(e_.size());
    for (std::uint8_t v : e_) s += static_cast<char>('0' + v);
    return s;
}

FqMat FqMat::from_digits(FieldId fid, int rows, int cols, const std::string& digits) {
    if (digits.size() != static_cast<std::size_t>(rows) * cols)
        throw field_error("digit string does not match matrix shape");
    FqMat m(fid, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            char c = digits[static_cast<std::size_t>(i) * cols + j];
            if (c < '0' || static_cast<unsigned>(c - '0') >= fid.q())
                throw field_error("invalid digit in matrix encoding");
            m.set(i, j, static_cast<unsigned>(c - '0'));
        }
    return m;
}

std::string FqMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << elem(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

} // namespace edc
