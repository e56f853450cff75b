#ifndef PFZ_LIFTING_HPP
#define PFZ_LIFTING_HPP

#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace pfz {

// Coefficients t_2..t_k with v_1 + sum t_i*v_i coprime to m.
// Requires gcd(v) = 1, length >= 2, m != 0.
std::vector<Int> make_unit(const std::vector<Int>& v, const Int& m);

// One recorded elementary operation. A transvection is I + r*e_ij (i != j);
// a diag pair is the identity with u at position i and u^-1 mod n at j.
struct ElementaryOp {
  enum class Kind { transvection, diag_pair };
  Kind kind = Kind::transvection;
  size_t i = 0;
  size_t j = 0;
  Int param;  // r for a transvection, the unit u for a diag pair

  Mat to_matrix_mod(size_t n_dim, const Int& modulus) const;
  // Transvections lift to the integers as written; diag pairs have no
  // integer lift in general and are rejected here.
  Mat to_matrix_exact(size_t n_dim) const;
};

// Factorization A = (left ops, in order) * D * (right ops, in order) mod n.
struct Transcript {
  std::vector<ElementaryOp> left;
  std::vector<ElementaryOp> right;
};

// Multiplies the transcript back out around the diagonal, mod n.
Mat replay_transcript(const Transcript& t, const Mat& diagonal, const Int& modulus);

struct DiagonalReduction {
  std::vector<Int> diagonal;  // unit residues, product = 1 mod n
  Transcript transcript;
};

// Reduces A (det = 1 mod n) to a diagonal matrix by elementary operations,
// recording them for replay.
DiagonalReduction reduce_to_diagonal(const ResidueMatrix& a);

// Integer matrix of determinant one congruent to diag(d_1..d_k) mod n.
// Requires k >= 2, each d_i coprime to n and prod d_i = 1 mod n.
UnimodularMatrix lift_diagonal(const std::vector<Int>& diag, const Ideal& modulus);

// Integer lift of A in SL_k(Z): determinant exactly one, reduction mod n
// equal to A entrywise. k = 1 is accepted only for A = [1].
UnimodularMatrix sl_lift(const ResidueMatrix& a);

// k column vectors in Z^(k-1) whose (k-1)-minors, omitting each vector in
// turn, are congruent to the entries of b mod n. Requires some b_i to be
// invertible mod n and k >= 2.
std::vector<std::vector<Int>> wedge_completion(const std::vector<Int>& b, const Ideal& modulus);

// g in SL_k(Z) with a*g = (1, 0, ..., 0) mod n. Requires gcd(a) = 1, k >= 2.
UnimodularMatrix row_to_e1(const std::vector<Int>& a, const Ideal& modulus);

}  // namespace pfz

#endif
