#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edc/cyclotomic.hpp"

namespace edc {

struct linalg_error : arith_error {
    using arith_error::arith_error;
};

/// Dense exact matrix over Q(zeta_n).  All entries share one conductor;
/// entries are canonical, so operator== is mathematical equality.
class CycMat {
  public:
    CycMat() : n_(1), rows_(0), cols_(0) {}
    CycMat(unsigned conductor, int rows, int cols);
    static CycMat identity(unsigned conductor, int n);
    static CycMat scalar(unsigned conductor, int n, const CycNum& c);

    unsigned conductor() const { return n_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const CycNum& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    CycNum& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend CycMat operator*(const CycMat& a, const CycMat& b);
    friend CycMat operator+(const CycMat& a, const CycMat& b);
    friend CycMat operator-(const CycMat& a, const CycMat& b);
    friend CycMat operator*(const CycNum& c, const CycMat& m);
    friend CycMat operator*(const Rat& c, const CycMat& m);
    CycMat operator-() const;
    CycMat transpose() const;

    friend bool operator==(const CycMat& a, const CycMat& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const CycMat& a, const CycMat& b) { return !(a == b); }

    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;
    /// The scalar c when the matrix equals c*I with c != 0.
    std::optional<CycNum> scalar_value() const;
    CycNum trace() const;

    int rank() const;
    std::optional<CycMat> inverse() const;
    CycMat lift(unsigned N) const;

    void encode_into(std::vector<std::uint8_t>& out) const;
    static CycMat decode(unsigned conductor, int rows, int cols,
                         const std::uint8_t* data, std::size_t size);

    std::string str() const;

  private:
    unsigned n_;
    int rows_, cols_;
    std::vector<CycNum> e_;
};

/// Subspace of Q(zeta_n)^ambient in canonical form: the basis rows are the
/// nonzero rows of the reduced row echelon form of any spanning set, so two
/// equal subspaces always compare equal.
class Subspace {
  public:
    Subspace() : n_(1), ambient_(0) {}
    /// Canonicalizes the span of the given row vectors.
    Subspace(unsigned conductor, int ambient, std::vector<std::vector<CycNum>> spanning);
    static Subspace zero(unsigned conductor, int ambient);
    static Subspace full(unsigned conductor, int ambient);

    unsigned conductor() const { return n_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<CycNum>>& basis() const { return basis_; }
    /// Basis rows stacked into a dim x ambient matrix.
    CycMat basis_matrix() const;

    bool contains(const std::vector<CycNum>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    unsigned n_;
    int ambient_;
    std::vector<std::vector<CycNum>> basis_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_in_place(std::vector<std::vector<CycNum>>& rows, unsigned conductor);

/// Null space {v : M v = 0} with canonical echelon basis.
Subspace kernel(const CycMat& m);

/// Column space as a canonical subspace.
Subspace image(const CycMat& m);

/// Gram matrix of the bilinear form restricted to the basis of S:
/// out[i][j] = b_i * gram * b_j^T.
CycMat restrict_form(const CycMat& gram, const Subspace& s);

/// Applies M to a (column) vector.
std::vector<CycNum> apply_matrix(const CycMat& m, const std::vector<CycNum>& v);

} // namespace edc
