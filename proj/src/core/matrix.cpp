#include "matrix.hpp"

namespace pfz {

Mat::Mat(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw input_error("Mat: empty row list");
  rows_ = rows.size();
  cols_ = rows[0].size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw input_error("Mat: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> Mat::row(size_t i) const {
  return std::vector<Int>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Mat::set_row(size_t i, const std::vector<Int>& r) {
  if (r.size() != cols_) throw input_error("Mat: row length mismatch");
  std::copy(r.begin(), r.end(), data_.begin() + i * cols_);
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::reduced_mod(const Int& n) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(i, j) = mod_floor(at(i, j), n);
  return r;
}

std::vector<std::vector<Int>> Mat::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw input_error("Mat: dimension mismatch in product");
  Mat c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::vector<Int> operator*(const std::vector<Int>& v, const Mat& m) {
  if (v.size() != m.rows()) throw input_error("Mat: dimension mismatch in row product");
  std::vector<Int> out(m.cols(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

Int determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw input_error("determinant: matrix not square");
  size_t n = m.rows();
  if (n == 0) return 1;
  Mat a = m;
  // Bareiss: all intermediate divisions are exact.
  Int sign = 1;
  Int prev = 1;
  for (size_t t = 0; t + 1 < n; ++t) {
    if (a.at(t, t) == 0) {
      size_t swap_row = t + 1;
      while (swap_row < n && a.at(swap_row, t) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (size_t i = t + 1; i < n; ++i)
      for (size_t j = t + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / prev;
    prev = a.at(t, t);
  }
  return sign * a.at(n - 1, n - 1);
}

Mat unimodular_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw input_error("unimodular_inverse: matrix not square");
  size_t n = m.rows();
  if (determinant(m) != 1) throw input_error("unimodular_inverse: determinant is not one");
  // Adjugate by cofactors; with det = 1 this is the exact inverse.
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Mat minor(n - 1, n - 1);
      for (size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(j, i) = cof;
    }
  return inv;
}

UnimodularMatrix::UnimodularMatrix(Mat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw input_error("UnimodularMatrix: matrix not square");
  if (determinant(entries_) != 1)
    throw input_error("UnimodularMatrix: determinant is not one");
}

UnimodularMatrix UnimodularMatrix::identity(size_t n) {
  return UnimodularMatrix(Mat::identity(n));
}

ResidueMatrix::ResidueMatrix(Ideal modulus, Mat entries)
    : modulus_(std::move(modulus)), entries_(entries.reduced_mod(modulus_.modulus())) {
  if (entries_.rows() != entries_.cols())
    throw input_error("ResidueMatrix: matrix not square");
  if (mod_floor(determinant(entries_), modulus_.modulus()) != mod_floor(Int(1), modulus_.modulus()))
    throw input_error("ResidueMatrix: determinant is not 1 mod n");
}

}  // namespace pfz
