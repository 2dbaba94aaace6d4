#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edc/fq.hpp"

namespace edc {

/// Dense matrix over a finite field.  Entries are canonical residues, so
/// structural equality is mathematical equality; small enough to pack into a
/// single 64-bit key for group-closure membership tests.
class FqMat {
  public:
    FqMat() : fid_{0, 1, 0}, rows_(0), cols_(0) {}
    FqMat(FieldId fid, int rows, int cols);
    static FqMat identity(FieldId fid, int n);
    static FqMat from_values(FieldId fid, int rows, int cols, const std::vector<int>& vals);

    FieldId field() const { return fid_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    unsigned at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, unsigned v);
    FqElem elem(int i, int j) const { return FqElem(fid_, at(i, j)); }

    friend FqMat operator*(const FqMat& a, const FqMat& b);
    FqMat operator-() const;
    FqMat transpose() const;
    std::optional<FqMat> inverse() const;
    bool is_identity() const;
    bool is_scalar() const;

    friend bool operator==(const FqMat& a, const FqMat& b) {
        return a.fid_ == b.fid_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FqMat& a, const FqMat& b) { return !(a == b); }

    /// Base-q digit packing of the entry string; total entry count must fit.
    std::uint64_t pack() const;
    static FqMat unpack(FieldId fid, int rows, int cols, std::uint64_t key);
    /// Entries as base-q digit string, row-major ("0120...").
    std::string digits() const;
    static FqMat from_digits(FieldId fid, int rows, int cols, const std::string& digits);

    std::string str() const;

  private:
    FieldId fid_;
    int rows_, cols_;
    std::vector<std::uint8_t> e_;
};

} // namespace edc
