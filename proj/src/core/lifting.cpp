#include "lifting.hpp"

#include <algorithm>

namespace pfz {

namespace {

Int inv_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  ExtGcd e = ext_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw input_error("inv_mod: value not invertible");
  return mod_floor(e.x, m);
}

}  // namespace

std::vector<Int> make_unit(const std::vector<Int>& v, const Int& m) {
  if (v.size() < 2) throw input_error("make_unit: need at least 2 entries");
  if (m == 0) throw input_error("make_unit: m must be nonzero");
  if (gcd_vec(v) != 1) throw input_error("make_unit: vector is not unital");
  // d = gcd of the tail lies in the span of the tail and is coprime to v_0,
  // so one arithmetic-progression step lands on a value coprime to m.
  std::vector<Int> tail(v.begin() + 1, v.end());
  auto [d, coeffs] = ext_gcd_vec(tail);
  Int n0 = coprime_shift(v[0], d, m);
  for (Int& c : coeffs) c *= n0;
  return coeffs;
}

Mat ElementaryOp::to_matrix_mod(size_t n_dim, const Int& modulus) const {
  Mat m = Mat::identity(n_dim);
  if (kind == Kind::transvection) {
    m.at(i, j) = mod_floor(param, modulus);
  } else {
    m.at(i, i) = mod_floor(param, modulus);
    m.at(j, j) = inv_mod(param, modulus);
  }
  return m;
}

Mat ElementaryOp::to_matrix_exact(size_t n_dim) const {
  if (kind != Kind::transvection)
    throw input_error("ElementaryOp: diag pairs do not lift to the integers");
  Mat m = Mat::identity(n_dim);
  m.at(i, j) = param;
  return m;
}

Mat replay_transcript(const Transcript& t, const Mat& diagonal, const Int& modulus) {
  size_t k = diagonal.rows();
  Mat acc = diagonal;
  for (auto it = t.left.rbegin(); it != t.left.rend(); ++it)
    acc = it->to_matrix_mod(k, modulus) * acc;
  for (const ElementaryOp& op : t.right) acc = acc * op.to_matrix_mod(k, modulus);
  return acc.reduced_mod(modulus);
}

DiagonalReduction reduce_to_diagonal(const ResidueMatrix& a) {
  const Int& n = a.modulus().modulus();
  size_t k = a.size();
  Mat x = a.entries();
  DiagonalReduction out;

  // Invariant: A = L * X * R mod n, ops stored in multiplication order.
  auto add_col = [&](size_t src, size_t dst, const Int& coeff) {
    // X <- X * (I + coeff*e_{src,dst}); record the inverse in front of R.
    if (coeff == 0) return;
    for (size_t r = 0; r < k; ++r)
      x.at(r, dst) = mod_floor(x.at(r, dst) + coeff * x.at(r, src), n);
    out.transcript.right.insert(
        out.transcript.right.begin(),
        ElementaryOp{ElementaryOp::Kind::transvection, src, dst, mod_floor(-coeff, n)});
  };
  auto add_row = [&](size_t src, size_t dst, const Int& coeff) {
    // X <- (I + coeff*e_{dst,src}) * X; record the inverse at the end of L.
    if (coeff == 0) return;
    for (size_t c = 0; c < k; ++c)
      x.at(dst, c) = mod_floor(x.at(dst, c) + coeff * x.at(src, c), n);
    out.transcript.left.push_back(
        ElementaryOp{ElementaryOp::Kind::transvection, dst, src, mod_floor(-coeff, n)});
  };

  for (size_t t = 0; t < k; ++t) {
    if (t + 1 < k) {
      // Bring a unit into the pivot using the columns to the right. The row
      // slice together with n is unital because the trailing minor has unit
      // determinant mod n.
      std::vector<Int> w;
      w.push_back(x.at(t, t));
      for (size_t j = t + 1; j < k; ++j) w.push_back(x.at(t, j));
      w.push_back(n);
      std::vector<Int> tau = make_unit(w, n);
      for (size_t j = t + 1; j < k; ++j) add_col(j, t, tau[j - t - 1]);
    }
    Int u = x.at(t, t);
    if (gcd_int(u, n) != 1 && n != 1)
      throw input_error("reduce_to_diagonal: failed to produce a unit pivot");
    Int u_inv = inv_mod(u, n);
    for (size_t j = t + 1; j < k; ++j) add_col(t, j, mod_floor(-x.at(t, j) * u_inv, n));
    for (size_t i = t + 1; i < k; ++i) add_row(t, i, mod_floor(-x.at(i, t) * u_inv, n));
  }

  out.diagonal.reserve(k);
  for (size_t t = 0; t < k; ++t) out.diagonal.push_back(x.at(t, t));
  return out;
}

UnimodularMatrix lift_diagonal(const std::vector<Int>& diag, const Ideal& modulus) {
  const Int& n = modulus.modulus();
  size_t k = diag.size();
  if (k < 2) throw input_error("lift_diagonal: need k >= 2");
  std::vector<Int> d(k);
  Int prod = 1;
  for (size_t i = 0; i < k; ++i) {
    d[i] = mod_floor(diag[i], n);
    if (n != 1 && gcd_int(d[i], n) != 1)
      throw input_error("lift_diagonal: entry not coprime to the modulus");
    prod *= d[i];
  }
  if (mod_floor(prod, n) != mod_floor(Int(1), n))
    throw input_error("lift_diagonal: product of entries is not 1 mod n");

  Int big_n = prod - 1;  // element of (n)
  if (big_n == 0) return UnimodularMatrix(Mat::identity(k));  // all entries already 1

  // Banded lift: superdiagonal and corner carry big_n, the first diagonal
  // entry absorbs an n-adic correction so the determinant closes to one.
  Int nk = 1;
  for (size_t i = 0; i < k; ++i) nk *= big_n;
  Int p_tail = 1;
  for (size_t i = 1; i < k; ++i) p_tail *= d[i];

  Int e11 = inv_mod(p_tail, abs_int(nk));  // = d_1 + (multiple of big_n)
  Int z = (e11 * p_tail - 1) / nk;
  if (k % 2 == 1) z = -z;

  Mat e(k, k);
  e.at(0, 0) = e11;
  for (size_t i = 1; i < k; ++i) e.at(i, i) = d[i];
  for (size_t i = 0; i + 1 < k; ++i) e.at(i, i + 1) = big_n;
  e.at(k - 1, 0) = big_n * z;
  UnimodularMatrix lift(std::move(e));
  Mat expected(k, k);
  for (size_t i = 0; i < k; ++i) expected.at(i, i) = mod_floor(d[i], n);
  if (lift.entries().reduced_mod(n) != expected)
    throw input_error("lift_diagonal: lift does not reduce to the diagonal");
  return lift;
}

UnimodularMatrix sl_lift(const ResidueMatrix& a) {
  const Int& n = a.modulus().modulus();
  size_t k = a.size();
  if (k == 0) throw input_error("sl_lift: empty matrix");
  if (k == 1) {
    // det = 1 mod n forces the single entry to be 1 mod n; its only integer
    // lift of determinant one is [1].
    return UnimodularMatrix(Mat::identity(1));
  }
  DiagonalReduction red = reduce_to_diagonal(a);
  Mat acc = lift_diagonal(red.diagonal, a.modulus()).entries();
  for (auto it = red.transcript.left.rbegin(); it != red.transcript.left.rend(); ++it)
    acc = it->to_matrix_exact(k) * acc;
  for (const ElementaryOp& op : red.transcript.right) acc = acc * op.to_matrix_exact(k);
  UnimodularMatrix lift(std::move(acc));
  if (lift.entries().reduced_mod(n) != a.entries())
    throw input_error("sl_lift: lift does not reduce to the input");
  return lift;
}

namespace {

// Completion with the unit in the leading slot: w_0 carries the other
// coordinates, w_1 = c_0*e_0, the rest are standard basis columns.
std::vector<std::vector<Int>> wedge_leading(const std::vector<Int>& c, const Int& n) {
  size_t k = c.size();
  Int u_inv = inv_mod(mod_floor(c[0], n), n);
  std::vector<std::vector<Int>> w(k, std::vector<Int>(k - 1, 0));
  w[0][0] = mod_floor(c[1], n);
  for (size_t j = 1; j + 1 < k; ++j) {
    Int val = u_inv * c[j + 1];
    if (j % 2 == 1) val = -val;
    w[0][j] = mod_floor(val, n);
  }
  w[1][0] = mod_floor(c[0], n);
  for (size_t j = 2; j < k; ++j) w[j][j - 1] = 1;
  return w;
}

}  // namespace

std::vector<std::vector<Int>> wedge_completion(const std::vector<Int>& b, const Ideal& modulus) {
  const Int& n = modulus.modulus();
  size_t k = b.size();
  if (k < 2) throw input_error("wedge_completion: need k >= 2");
  size_t s = k;
  for (size_t i = 0; i < k; ++i) {
    if (gcd_int(mod_floor(b[i], n), n) == 1 || n == 1) {
      s = i;
      break;
    }
  }
  if (s == k) throw input_error("wedge_completion: no coordinate is a unit mod n");
  if (s == 0) return wedge_leading(b, n);

  // Move the unit to the front; the swap changes minor signs, compensated by
  // negating the inputs: slots 0 and s pick up (-1)^(s-1), the rest -1.
  std::vector<Int> c = b;
  Int sign = (s % 2 == 0) ? -1 : 1;  // (-1)^(s-1)
  c[0] = sign * b[s];
  c[s] = sign * b[0];
  for (size_t i = 0; i < k; ++i)
    if (i != 0 && i != s) c[i] = -b[i];
  std::vector<std::vector<Int>> w = wedge_leading(c, n);
  std::vector<std::vector<Int>> v = w;
  std::swap(v[0], v[s]);
  return v;
}

UnimodularMatrix row_to_e1(const std::vector<Int>& a, const Ideal& modulus) {
  const Int& n = modulus.modulus();
  size_t k = a.size();
  if (k < 2) throw input_error("row_to_e1: need k >= 2");
  if (gcd_vec(a) != 1) throw input_error("row_to_e1: vector is not unital");
  if (n == 1) return UnimodularMatrix(Mat::identity(k));

  // Bezout row with alternating signs so the Laplace expansion of the
  // completed matrix evaluates to 1 mod n.
  auto [g, bez] = ext_gcd_vec(a);
  std::vector<Int> b(k);
  for (size_t i = 0; i < k; ++i) b[i] = (i % 2 == 0) ? bez[i] : -bez[i];

  std::vector<Int> t = make_unit(b, n);
  std::vector<Int> c = b;
  for (size_t i = 1; i < k; ++i) c[0] += t[i - 1] * b[i];

  std::vector<std::vector<Int>> v = wedge_completion(c, modulus);
  // Undo the unit-making shifts on the completion so the minors return to
  // the original Bezout row.
  for (size_t j = 1; j < k; ++j) {
    Int s = (j % 2 == 0) ? t[j - 1] : -t[j - 1];
    for (size_t r = 0; r + 1 < k; ++r) v[j][r] = mod_floor(v[j][r] + s * v[0][r], n);
  }

  Mat bmat(k, k);
  for (size_t j = 0; j < k; ++j) {
    bmat.at(0, j) = mod_floor(a[j], n);
    for (size_t r = 0; r + 1 < k; ++r) bmat.at(r + 1, j) = v[j][r];
  }
  UnimodularMatrix lift = sl_lift(ResidueMatrix(modulus, bmat));
  UnimodularMatrix g_out = lift.inverse();

  std::vector<Int> check = a * g_out.entries();
  if (mod_floor(check[0], n) != mod_floor(Int(1), n))
    throw input_error("row_to_e1: postcondition failed");
  for (size_t i = 1; i < k; ++i)
    if (mod_floor(check[i], n) != 0) throw input_error("row_to_e1: postcondition failed");
  return g_out;
}

}  // namespace pfz
