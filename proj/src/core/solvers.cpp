#include "solvers.hpp"

#include <algorithm>
#include <set>

#include "lifting.hpp"

namespace pfz {

namespace {

Int inv_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  ExtGcd e = ext_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw input_error("inv_mod: value not invertible");
  return mod_floor(e.x, m);
}

void require_pairwise_coprime(const std::vector<ProjPoint>& targets, const char* who) {
  for (size_t i = 0; i < targets.size(); ++i)
    for (size_t j = i + 1; j < targets.size(); ++j)
      if (gcd_int(targets[i].ideal().modulus(), targets[j].ideal().modulus()) != 1)
        throw input_error(std::string(who) + ": moduli are not pairwise coprime");
}

}  // namespace

Int sigma_monoid(const std::vector<Int>& prime_set,
                 const std::vector<std::pair<Int, unsigned>>& factorization) {
  std::set<Int> seen;
  Int value = 1;
  for (const auto& [p, t] : factorization) {
    if (std::find(prime_set.begin(), prime_set.end(), p) == prime_set.end())
      throw input_error("sigma_monoid: prime outside the supporting set");
    if (!seen.insert(p).second) throw input_error("sigma_monoid: repeated prime");
    for (unsigned i = 0; i < t; ++i) value *= p;
  }
  return value;
}

bool s_set_membership(const Int& x, const Ideal& ideal, const std::vector<Int>& prime_set) {
  if (x == 0) throw input_error("s_set_membership: x must be nonzero");
  if (x % ideal.modulus() != 0) return false;
  for (const Int& p : prime_set)
    if (valuation(x, p).order != ideal.exponent_of(p)) return false;
  return true;
}

std::vector<Int> FactoredRep::assembled() const {
  std::vector<Int> out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = g[i] * v[i];
  return out;
}

FactoredRep rep_factor(const ProjPoint& p, const std::vector<Int>& prime_set) {
  const Ideal& ideal = p.ideal();
  const Int& n = ideal.modulus();
  for (const auto& [q, e] : ideal.factors())
    if (std::find(prime_set.begin(), prime_set.end(), q) == prime_set.end())
      throw input_error("rep_factor: prime set must contain every prime of the modulus");

  size_t len = p.coords().size();
  FactoredRep rep{ideal, std::vector<Int>(len, 1), std::vector<Int>(len, 1)};
  Int rad_f = 1;
  for (const Int& q : prime_set) rad_f *= q;
  std::vector<Int> leftovers(len, 1);

  for (size_t i = 0; i < len; ++i) {
    Int x = p.coords()[i];
    if (x == 0) x = n;  // the smallest positive element of (n)

    // g = prod p^min(e_p, v_p(x)); the cofactor congruences pin v mod the
    // leftover powers, where it is automatically a p-unit.
    Int g = 1;
    Int leftover = 1;  // prod p^(e_p - min)
    for (const auto& [q, e] : ideal.factors()) {
      unsigned vq = valuation(x, q).order;
      unsigned m = std::min<unsigned>(vq, e);
      for (unsigned s = 0; s < m; ++s) g *= q;
      for (unsigned s = m; s < e; ++s) leftover *= q;
    }
    Int y = x / g;

    Int v0 = leftover == 1 ? Int(1) : mod_floor(y, leftover);
    Int avoid = 1;  // primes of F not pinned by the congruence
    for (const Int& q : prime_set)
      if (leftover % q != 0) avoid *= q;
    Int shift = coprime_shift(v0, leftover, avoid);
    rep.g[i] = g;
    rep.v[i] = v0 + shift * leftover;
    leftovers[i] = leftover;
  }

  // The assembled tuple must be unital over the integers; a stray prime
  // outside F can be pushed off the first coordinate by a step that keeps
  // both its congruence and the coprimality to F intact.
  std::vector<Int> asm_tuple = rep.assembled();
  if (gcd_vec(asm_tuple) != 1) {
    Int step = leftovers[0] * rad_f;
    Int rest = 0;
    for (size_t i = 1; i < asm_tuple.size(); ++i) rest = gcd_int(rest, asm_tuple[i]);
    Int t = 0;
    while (gcd_int(rep.g[0] * (rep.v[0] + t * step), rest) != 1) ++t;
    rep.v[0] += t * step;
  }
  return rep;
}

std::pair<Int, Int> comax_bezout(const Int& x, const Int& y, const Int& modulus) {
  const Int& n = modulus;
  if (n < 1) throw input_error("comax_bezout: modulus must be >= 1");
  if (gcd_int(gcd_int(x, y), n) != 1)
    throw input_error("comax_bezout: gcd(x, y, n) must be 1");
  if (n == 1) return {1, 1};

  ExtGcd xy = ext_gcd(x, y);
  ExtGcd gn = ext_gcd(xy.g, n);
  Int a1 = xy.x * gn.x;
  Int b1 = xy.y * gn.x;
  Int i_elt = gn.y * n;  // a1*x + b1*y + i_elt = 1

  if (b1 != 0) {
    Int e = b1 * y + i_elt;
    Int t = coprime_shift(a1, -e, b1);
    Int a = a1 - t * e;
    Int b = (1 + t * x) * b1;
    return {a, b};
  }
  if (a1 != 0) {
    Int e = a1 * x + i_elt;
    Int t = coprime_shift(b1, -e, a1);
    Int b = b1 - t * e;
    Int a = (1 + t * y) * a1;
    return {a, b};
  }
  throw input_error("comax_bezout: degenerate Bezout data");
}

std::vector<Int> unital_shift(const std::vector<Int>& a, const Int& modulus) {
  const Int& n = modulus;
  size_t r = a.size();
  if (r < 2) throw input_error("unital_shift: need at least 2 entries");
  if (n < 1) throw input_error("unital_shift: modulus must be >= 1");
  Int g_all = n;
  for (const Int& ai : a) g_all = gcd_int(g_all, ai);
  if (g_all != 1 && n != 1) throw input_error("unital_shift: gcd(a, n) must be 1");

  std::vector<Int> t(r, 0);
  if (n == 1) {
    if (gcd_vec(a) != 1) t[0] = 1 - a[0];
    return t;
  }

  auto [g, x] = ext_gcd_vec(a);
  if (g == 1) return t;  // already unital

  // Scale the Bezout data so sum a_i*x_i + i_elt = 1 with i_elt in (n).
  ExtGcd gn = ext_gcd(g, n);
  for (Int& xi : x) xi *= gn.x;
  Int i_elt = gn.y * n;

  std::vector<size_t> nz;
  for (size_t i = 0; i < r; ++i)
    if (x[i] != 0) nz.push_back(i);

  if (nz.size() == 1) {
    size_t i1 = nz[0];
    // A zero partner absorbs i_elt directly; otherwise manufacture a second
    // nonzero coefficient from a 2x2 antisymmetric pair, or fall back to the
    // comaximal Bezout pair when only two entries exist.
    for (size_t j = 0; j < r; ++j) {
      if (j != i1 && a[j] == 0) {
        t[j] = i_elt;
        return t;
      }
    }
    if (r >= 3) {
      size_t j2 = (i1 == 0) ? 1 : 0;
      size_t j3 = (i1 == 0 || i1 == 1) ? 2 : 1;
      x[j2] = a[j3];
      x[j3] = -a[j2];
      nz.clear();
      for (size_t i = 0; i < r; ++i)
        if (x[i] != 0) nz.push_back(i);
    } else {
      size_t j = 1 - i1;
      auto [alpha, beta] = comax_bezout(a[i1], a[j], n);
      Int ip = 1 - (alpha * a[i1] + beta * a[j]);  // multiple of n
      ExtGcd ab = ext_gcd(alpha, beta);
      t[i1] = ab.x * ip;
      t[j] = ab.y * ip;
      return t;
    }
  }

  size_t i1 = nz[0], i2 = nz[1];
  Int e = 1 - a[i1] * x[i1];  // = sum of the other terms plus i_elt
  Int sh = coprime_shift(x[i1], -e, x[i2]);
  Int x1p = x[i1] - sh * e;
  Int lam = 1 + sh * a[i1];
  ExtGcd s = ext_gcd(x1p, x[i2] * lam);
  if (s.g != 1) throw input_error("unital_shift: internal coprimality failed");
  t[i1] = i_elt * s.x * lam;
  t[i2] = i_elt * s.y * lam;
  return t;
}

SolveReport verify_certificate(const Mat& certificate, CertificateEquation equation,
                               const std::vector<ProjPoint>& targets) {
  SolveReport report;
  report.certificate = certificate;
  report.equation = equation;
  if (certificate.rows() != targets.size())
    throw input_error("verify_certificate: row count does not match targets");

  switch (equation) {
    case CertificateEquation::determinant:
      report.equation_value = determinant(certificate);
      break;
    case CertificateEquation::sum_product: {
      Int total = 0;
      for (size_t j = 0; j < certificate.cols(); ++j) {
        Int prod = 1;
        for (size_t i = 0; i < certificate.rows(); ++i) prod *= certificate.at(i, j);
        total += prod;
      }
      report.equation_value = total;
      break;
    }
    case CertificateEquation::minor_gcd: {
      // gcd of all maximal minors, by choosing columns.
      size_t r = certificate.rows(), k = certificate.cols();
      if (r > k) throw input_error("verify_certificate: more rows than columns");
      std::vector<size_t> pick(r);
      for (size_t i = 0; i < r; ++i) pick[i] = i;
      Int g = 0;
      bool more = true;
      while (more) {
        Mat sub(r, r);
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) sub.at(i, j) = certificate.at(i, pick[j]);
        g = gcd_int(g, determinant(sub));
        more = false;
        for (size_t pos = r; pos-- > 0;) {
          if (pick[pos] < k - (r - pos)) {
            ++pick[pos];
            for (size_t q = pos + 1; q < r; ++q) pick[q] = pick[q - 1] + 1;
            more = true;
            break;
          }
        }
      }
      report.equation_value = g;
      break;
    }
  }

  bool all_rows = true;
  for (size_t i = 0; i < targets.size(); ++i) {
    RowCheck check{targets[i], {}, false};
    const Int& n = targets[i].ideal().modulus();
    std::vector<Int> row = certificate.row(i);
    for (Int& e : row) e = mod_floor(e, n);
    check.achieved = row;
    Int g = n;
    for (const Int& e : row) g = gcd_int(g, e);
    if (g == 1 || n == 1) {
      ProjPoint achieved(targets[i].ideal(), row);
      check.equal = points_equal(achieved, targets[i]);
    }
    all_rows = all_rows && check.equal;
    report.rows.push_back(std::move(check));
  }
  report.pass = all_rows && report.equation_value == 1;
  return report;
}

namespace {

// Entry-size reduction by row operations scaled by the row moduli: the
// determinant and every row class are preserved. Sum-product certificates
// are excluded, their defining equation is not row-op invariant.
void size_reduce_rows(Mat& cert, const std::vector<Int>& moduli) {
  size_t r = cert.rows(), k = cert.cols();
  for (int sweep = 0; sweep < 4; ++sweep) {
    bool changed = false;
    for (size_t i = 0; i < r; ++i) {
      for (size_t l = 0; l < r; ++l) {
        if (l == i) continue;
        Int dot = 0, norm = 0;
        for (size_t j = 0; j < k; ++j) {
          dot += cert.at(i, j) * cert.at(l, j) * moduli[i];
          norm += cert.at(l, j) * cert.at(l, j) * moduli[i] * moduli[i];
        }
        if (norm == 0) continue;
        // nearest integer of dot/norm
        Int t = (2 * dot + (dot < 0 ? -norm : norm)) / (2 * norm);
        if (t == 0) continue;
        for (size_t j = 0; j < k; ++j) cert.at(i, j) -= t * moduli[i] * cert.at(l, j);
        changed = true;
      }
    }
    if (!changed) break;
  }
}

std::vector<Int> moduli_of(const std::vector<ProjPoint>& targets) {
  std::vector<Int> out;
  out.reserve(targets.size());
  for (const ProjPoint& t : targets) out.push_back(t.ideal().modulus());
  return out;
}

std::vector<Int> all_primes_of(const std::vector<ProjPoint>& targets) {
  std::set<Int> primes;
  for (const ProjPoint& t : targets)
    for (const auto& [p, e] : t.ideal().factors()) primes.insert(p);
  return std::vector<Int>(primes.begin(), primes.end());
}

}  // namespace

SolveReport sl2_preimage(const ProjPoint& p, const ProjPoint& q) {
  if (p.dim() != 1 || q.dim() != 1) throw input_error("sl2_preimage: points must have dim 1");
  const Int& n1 = p.ideal().modulus();
  const Int& n2 = q.ideal().modulus();
  if (gcd_int(n1, n2) != 1) throw input_error("sl2_preimage: moduli must be coprime");

  Mat cert(2, 2);
  if (n1 == 1 && n2 == 1) {
    cert = Mat::identity(2);
  } else if (n1 == 1) {
    std::vector<Int> row2 = unital_lift(q);
    ExtGcd e = ext_gcd(row2[1], row2[0]);
    cert = Mat({{e.x, -e.y}, {row2[0], row2[1]}});
  } else if (n2 == 1) {
    std::vector<Int> row1 = unital_lift(p);
    ExtGcd e = ext_gcd(row1[0], row1[1]);
    cert = Mat({{row1[0], row1[1]}, {-e.y, e.x}});
  } else {
    std::vector<Int> f = all_primes_of({p, q});
    FactoredRep fp = rep_factor(p, f);
    FactoredRep fq = rep_factor(q, f);
    const Int& A1 = fp.g[0];
    const Int& A2 = fp.g[1];
    const Int& B1 = fq.g[0];
    const Int& B2 = fq.g[1];
    Int u = mod_floor(fp.v[1] * inv_mod(fp.v[0], n1), n1);
    Int v = mod_floor(fq.v[1] * inv_mod(fq.v[0], n2), n2);
    Int i3 = n1 / (A1 * A2);
    Int j3 = n2 / (B1 * B2);

    // y inverts the off-diagonal products modulo the two leading factors,
    // then slides along A1*B1 until coprime to both moduli.
    std::vector<std::pair<Int, Int>> congruences;
    if (A1 != 1) congruences.push_back({mod_floor(-inv_mod(A2 * B1 * u, A1), A1), A1});
    if (B1 != 1) congruences.push_back({inv_mod(mod_floor(A1 * B2 * v, B1), B1), B1});
    Int y0 = congruences.empty() ? Int(0) : crt_solve(congruences);
    Int y = y0 + coprime_shift(y0, A1 * B1, n1 * n2) * A1 * B1;

    Int big_t = 1 + (A2 * B1 * u - A1 * B2 * v) * y;
    if (big_t % (A1 * B1) != 0) throw input_error("sl2_preimage: congruence setup failed");
    Int t_val = big_t / (A1 * B1);

    ExtGcd e = ext_gcd(B2 * j3, A2 * i3 * y);
    if (e.g != 1) throw input_error("sl2_preimage: correction ideals are not comaximal");
    Int alpha = e.x * t_val;
    Int beta = -e.y * t_val;

    cert = Mat({{A1, A2 * (u + i3 * beta * A1)}, {B1 * y, B2 * (y * v + j3 * alpha * B1)}});
    size_reduce_rows(cert, {n1, n2});
  }
  return verify_certificate(cert, CertificateEquation::determinant, {p, q});
}

SolveReport sigma_preimage(const std::vector<ProjPoint>& targets) {
  size_t k = targets.size();
  if (k < 2) throw input_error("sigma_preimage: need at least 2 targets");
  for (const ProjPoint& t : targets)
    if (t.dim() != k - 1)
      throw input_error("sigma_preimage: need dim k-1 targets for k rows");
  require_pairwise_coprime(targets, "sigma_preimage");

  std::vector<Int> f = all_primes_of(targets);
  std::vector<Int> moduli = moduli_of(targets);

  // Reduce the row representatives to the identity with accumulated column
  // transforms; the certificate is the inverse of the accumulated product.
  Mat y_mat(k, k);
  for (size_t i = 0; i < k; ++i) y_mat.set_row(i, unital_lift(targets[i]));
  Mat g_acc = Mat::identity(k);

  auto apply_col = [&](size_t src, size_t dst, Int coeff) {
    if (coeff == 0) return;
    for (size_t r = 0; r < k; ++r) {
      y_mat.at(r, dst) += coeff * y_mat.at(r, src);
      g_acc.at(r, dst) += coeff * g_acc.at(r, src);
    }
  };

  for (size_t j = 0; j < k; ++j) {
    const Int& nj = moduli[j];
    // Fresh factored representative of the current class of row j: its
    // entries keep the primes of the earlier moduli out of the picture.
    ProjPoint cur(targets[j].ideal(), y_mat.row(j));
    y_mat.set_row(j, rep_factor(cur, f).assembled());

    Int earlier = 1;
    for (size_t i = 0; i < j; ++i) earlier *= moduli[i];

    std::vector<Int> w;
    w.push_back(y_mat.at(j, j));
    for (size_t c = j + 1; c < k; ++c) w.push_back(y_mat.at(j, c));
    for (size_t c = 0; c < j; ++c) w.push_back(earlier * y_mat.at(j, c));
    std::vector<Int> tau = make_unit(w, nj);
    size_t idx = 0;
    for (size_t c = j + 1; c < k; ++c) apply_col(c, j, tau[idx++]);
    for (size_t c = 0; c < j; ++c) apply_col(c, j, tau[idx++] * earlier);
    // Earlier rows moved inside their classes only; snap them back to e_i.
    for (size_t i = 0; i < j; ++i) {
      std::vector<Int> ei(k, 0);
      ei[i] = 1;
      y_mat.set_row(i, ei);
    }

    Int u = mod_floor(y_mat.at(j, j), nj);
    if (nj != 1 && gcd_int(u, nj) != 1)
      throw input_error("sigma_preimage: failed to produce a unit pivot");
    Int u_inv = inv_mod(u, nj);
    std::vector<Int> z(k);
    for (size_t c = 0; c < k; ++c) z[c] = mod_floor(y_mat.at(j, c) * u_inv, nj);
    z[j] = 1;
    y_mat.set_row(j, z);
    for (size_t c = 0; c < k; ++c)
      if (c != j) apply_col(j, c, -y_mat.at(j, c));
  }
  if (!(y_mat == Mat::identity(k)))
    throw input_error("sigma_preimage: reduction did not reach the identity");

  Mat cert = unimodular_inverse(g_acc);
  size_reduce_rows(cert, moduli);
  return verify_certificate(cert, CertificateEquation::determinant, targets);
}

SolveReport grassmann_preimage(const std::vector<ProjPoint>& targets, unsigned cols) {
  size_t r = targets.size();
  size_t k = cols;
  if (r == 0) throw input_error("grassmann_preimage: no targets");
  if (r > k) throw input_error("grassmann_preimage: more rows than columns");
  for (const ProjPoint& t : targets)
    if (t.dim() != k - 1)
      throw input_error("grassmann_preimage: need dim k-1 targets");
  require_pairwise_coprime(targets, "grassmann_preimage");

  std::vector<ProjPoint> padded = targets;
  Int used = 1;
  for (const ProjPoint& t : targets) used *= t.ideal().modulus();
  Int p = 2;
  while (padded.size() < k) {
    while (!is_prime_u64(p) || used % p == 0) ++p;
    std::vector<Int> coords(k, 0);
    coords[padded.size()] = 1;
    padded.emplace_back(Ideal(p), coords);
    ++p;
  }
  SolveReport full = sigma_preimage(padded);

  Mat cert(r, k);
  for (size_t i = 0; i < r; ++i) cert.set_row(i, full.certificate.row(i));
  return verify_certificate(cert, CertificateEquation::minor_gcd, targets);
}

namespace {

// Two-row sum-product core over raw data: returns rows (x0, y0) with
// sum x0_j*y0_j = 1 exactly, x0 = x mod n1 and y0 = y mod n2 entrywise.
// Inputs must have gcd one; n1, n2 coprime.
std::pair<std::vector<Int>, std::vector<Int>> sumproduct_two(const std::vector<Int>& x,
                                                             const Int& n1,
                                                             const std::vector<Int>& y,
                                                             const Int& n2) {
  size_t k = x.size();
  Int s = 0;
  for (size_t j = 0; j < k; ++j) s += x[j] * y[j];

  ExtGcd e = ext_gcd(n1, n2);
  if (e.g != 1) throw input_error("sumproduct: moduli must be coprime");
  Int a_elt = n1 * e.x * (1 - s);  // a + b = 1 - s with a in (n1), b in (n2)

  auto [gy, w] = ext_gcd_vec(y);
  if (gy != 1) throw input_error("sumproduct: second row is not unital");

  std::vector<Int> x1(k);
  for (size_t j = 0; j < k; ++j) x1[j] = x[j] + a_elt * w[j];

  std::vector<Int> shift = unital_shift(x1, n1 * n2);
  std::vector<Int> x0(k);
  for (size_t j = 0; j < k; ++j) x0[j] = x1[j] + shift[j];

  Int i2 = -1;
  for (size_t j = 0; j < k; ++j) i2 += x0[j] * y[j];
  if (i2 % n2 != 0) throw input_error("sumproduct: residual is not in (n2)");

  auto [gx, z] = ext_gcd_vec(x0);
  if (gx != 1) throw input_error("sumproduct: corrected row lost unitality");
  std::vector<Int> y0(k);
  for (size_t j = 0; j < k; ++j) y0[j] = y[j] - z[j] * i2;
  return {x0, y0};
}

}  // namespace

SolveReport sumproduct_preimage(const std::vector<ProjPoint>& targets) {
  size_t r = targets.size();
  if (r < 2)
    throw input_error("sumproduct_preimage: need r >= 2, the map is not onto for one row");
  size_t k = targets[0].coords().size();
  if (k < 2) throw input_error("sumproduct_preimage: need k >= 2");
  for (const ProjPoint& t : targets)
    if (t.coords().size() != k) throw input_error("sumproduct_preimage: ragged targets");
  require_pairwise_coprime(targets, "sumproduct_preimage");

  Mat cert(r, k);
  if (r == 2) {
    auto [x0, y0] = sumproduct_two(unital_lift(targets[0]), targets[0].ideal().modulus(),
                                   unital_lift(targets[1]), targets[1].ideal().modulus());
    cert.set_row(0, x0);
    cert.set_row(1, y0);
  } else {
    std::vector<Int> f = all_primes_of(targets);
    Int n_total = 1;
    for (const ProjPoint& t : targets) n_total *= t.ideal().modulus();

    std::vector<std::vector<Int>> gam(r), unit(r);
    for (size_t i = 0; i < r; ++i) {
      FactoredRep fr = rep_factor(targets[i], f);
      gam[i] = fr.g;
      unit[i] = fr.v;
    }
    // Push the unit parts of the collapsed rows onto pairwise coprime
    // values: shifts by multiples of the full modulus product keep every
    // row class and stay off F.
    Int fixed = 1;
    for (size_t i = 1; i < r; ++i)
      for (size_t j = 0; j < k; ++j) {
        Int sh = coprime_shift(unit[i][j], n_total, fixed);
        unit[i][j] += sh * n_total;
        fixed *= unit[i][j];
      }

    // Collapse rows 2..r into one row; its modulus carries the full product
    // of the collapsed entries so the correction can be redistributed.
    std::vector<Int> collapsed(k, 1);
    Int pi_all = 1;
    for (size_t j = 0; j < k; ++j) {
      for (size_t i = 1; i < r; ++i) collapsed[j] *= gam[i][j] * unit[i][j];
      for (size_t i = 1; i < r; ++i) pi_all *= gam[i][j] * unit[i][j];
    }
    if (gcd_vec(collapsed) != 1)
      throw input_error("sumproduct_preimage: collapsed row lost unitality");
    Int tail_mod = 1;
    for (size_t i = 1; i < r; ++i) tail_mod *= targets[i].ideal().modulus();
    Int big_mod = pi_all * tail_mod;

    std::vector<Int> top(k);
    for (size_t j = 0; j < k; ++j) top[j] = gam[0][j] * unit[0][j];
    auto [row0, combined] =
        sumproduct_two(top, targets[0].ideal().modulus(), collapsed, big_mod);

    cert.set_row(0, row0);
    for (size_t i = 1; i + 1 < r; ++i) {
      std::vector<Int> row(k);
      for (size_t j = 0; j < k; ++j) row[j] = gam[i][j] * unit[i][j];
      cert.set_row(i, row);
    }
    std::vector<Int> last(k);
    for (size_t j = 0; j < k; ++j) {
      Int dj = 1;
      for (size_t i = 1; i + 1 < r; ++i) dj *= gam[i][j] * unit[i][j];
      Int delta = combined[j] - collapsed[j];  // multiple of big_mod
      if (delta % dj != 0)
        throw input_error("sumproduct_preimage: redistribution failed");
      last[j] = gam[r - 1][j] * unit[r - 1][j] + delta / dj;
    }
    cert.set_row(r - 1, last);
  }
  return verify_certificate(cert, CertificateEquation::sum_product, targets);
}

}  // namespace pfz
