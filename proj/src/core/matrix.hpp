#ifndef PFZ_MATRIX_HPP
#define PFZ_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "bigint.hpp"
#include "ring.hpp"

namespace pfz {

// Dense exact integer matrix.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit Mat(const std::vector<std::vector<Int>>& rows);

  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(size_t i) const;
  void set_row(size_t i, const std::vector<Int>& r);

  Mat transposed() const;
  Mat reduced_mod(const Int& n) const;
  std::vector<std::vector<Int>> to_rows() const;

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> data_;
};

Mat operator*(const Mat& a, const Mat& b);
std::vector<Int> operator*(const std::vector<Int>& v, const Mat& m);

// Exact determinant (fraction-free elimination). Square only.
Int determinant(const Mat& m);

// Inverse of a determinant-one matrix; integer because it is the adjugate.
Mat unimodular_inverse(const Mat& m);

// Square integer matrix with determinant exactly one.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(Mat entries);
  static UnimodularMatrix identity(size_t n);

  const Mat& entries() const { return entries_; }
  size_t size() const { return entries_.rows(); }
  UnimodularMatrix inverse() const { return UnimodularMatrix(unimodular_inverse(entries_)); }

 private:
  Mat entries_;
};

// Square residue matrix with det = 1 mod n.
class ResidueMatrix {
 public:
  ResidueMatrix(Ideal modulus, Mat entries);

  const Ideal& modulus() const { return modulus_; }
  const Mat& entries() const { return entries_; }
  size_t size() const { return entries_.rows(); }

 private:
  Ideal modulus_;
  Mat entries_;
};

}  // namespace pfz

#endif
