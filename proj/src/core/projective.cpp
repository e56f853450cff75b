#include "projective.hpp"

#include <algorithm>
#include <set>

#include "lifting.hpp"
#include "solvers.hpp"

namespace pfz {

namespace {

Int inv_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  ExtGcd e = ext_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw input_error("inv_mod: value not invertible");
  return mod_floor(e.x, m);
}

// Prime-power components of an ideal as ideals.
std::vector<Ideal> prime_power_split(const Ideal& ideal) {
  std::vector<Ideal> out;
  for (const auto& [p, e] : ideal.factors()) {
    Int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    out.emplace_back(q, std::vector<std::pair<Int, unsigned>>{{p, e}});
  }
  return out;
}

}  // namespace

ProjPoint::ProjPoint(Ideal ideal, std::vector<Int> coords)
    : ideal_(std::move(ideal)), coords_(std::move(coords)) {
  if (coords_.size() < 2) throw input_error("ProjPoint: need at least 2 coordinates");
  const Int& n = ideal_.modulus();
  Int g = n;
  for (Int& c : coords_) {
    c = mod_floor(c, n);
    g = gcd_int(g, c);
  }
  if (n != 1 && g != 1)
    throw input_error("ProjPoint: not unital-liftable, gcd(coords, n) = " + g.str());
}

bool points_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.ideal() != b.ideal()) throw input_error("points_equal: mismatched ideals");
  if (a.dim() != b.dim()) throw input_error("points_equal: mismatched dimensions");
  const Int& n = a.ideal().modulus();
  size_t len = a.coords().size();
  for (size_t i = 0; i < len; ++i)
    for (size_t j = i + 1; j < len; ++j) {
      Int cross = a.coords()[i] * b.coords()[j] - a.coords()[j] * b.coords()[i];
      if (mod_floor(cross, n) != 0) return false;
    }
  return true;
}

CanonicalForm canonicalize(const ProjPoint& p) {
  const Int& n = p.ideal().modulus();
  size_t len = p.coords().size();
  if (n == 1) return {n, std::vector<Int>(len, 0)};

  // Normalize within each prime-power component, then recombine.
  std::vector<std::vector<std::pair<Int, Int>>> per_coord(len);
  for (const auto& [prime, e] : p.ideal().factors()) {
    Int q = 1;
    for (unsigned i = 0; i < e; ++i) q *= prime;
    size_t pivot = len;
    for (size_t i = 0; i < len; ++i) {
      if (p.coords()[i] % prime != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == len) throw input_error("canonicalize: point invariant broken");
    Int scale = inv_mod(p.coords()[pivot], q);
    for (size_t i = 0; i < len; ++i)
      per_coord[i].emplace_back(mod_floor(p.coords()[i] * scale, q), q);
  }
  CanonicalForm form{n, std::vector<Int>(len)};
  for (size_t i = 0; i < len; ++i) form.coords[i] = crt_solve(per_coord[i]);
  return form;
}

std::vector<Int> unital_lift(const ProjPoint& p) {
  const Int& n = p.ideal().modulus();
  std::vector<Int> c = p.coords();
  if (n == 1) {
    std::fill(c.begin(), c.end(), 0);
    c[0] = 1;
    return c;
  }
  std::vector<Int> t = unital_shift(c, n);
  for (size_t i = 0; i < c.size(); ++i) c[i] += t[i];
  return c;
}

std::vector<CanonicalForm> enumerate_space(const Ideal& ideal, unsigned dim,
                                           std::uint64_t budget) {
  const Int& n = ideal.modulus();
  size_t len = dim + 1;
  if (len < 2) throw input_error("enumerate_space: dim must be >= 1");
  Int total = 1;
  for (size_t i = 0; i < len; ++i) total *= n;
  if (total > budget)
    throw budget_error("enumerate_space: " + total.str() + " tuples exceed budget");

  std::set<CanonicalForm> seen;
  std::vector<Int> tuple(len, 0);
  while (true) {
    Int g = n;
    for (const Int& c : tuple) g = gcd_int(g, c);
    if (g == 1 || n == 1) {
      seen.insert(canonicalize(ProjPoint(ideal, tuple)));
      if (n == 1) break;  // singleton space
    }
    size_t pos = 0;
    while (pos < len) {
      tuple[pos] += 1;
      if (tuple[pos] < n) break;
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == len) break;
  }
  return std::vector<CanonicalForm>(seen.begin(), seen.end());
}

Int cardinality(const Ideal& ideal, unsigned dim) {
  Int count = 1;
  for (const auto& [p, e] : ideal.factors()) {
    Int pk1 = 1;
    for (unsigned i = 0; i <= dim; ++i) pk1 *= p;  // p^(k+1)
    Int line = (pk1 - 1) / (p - 1);
    Int scale = 1;
    for (unsigned i = 0; i + 1 < e; ++i)
      for (unsigned j = 0; j < dim; ++j) scale *= p;
    count *= scale * line;
  }
  return count;
}

std::vector<ProjPoint> crt_reduce(const ProjPoint& p, const std::vector<Ideal>& split) {
  if (split.empty()) throw input_error("crt_reduce: empty split");
  Int prod = 1;
  for (size_t i = 0; i < split.size(); ++i) {
    for (size_t j = i + 1; j < split.size(); ++j)
      if (gcd_int(split[i].modulus(), split[j].modulus()) != 1)
        throw input_error("crt_reduce: split moduli are not pairwise coprime");
    prod *= split[i].modulus();
  }
  if (prod != p.ideal().modulus())
    throw input_error("crt_reduce: split does not multiply to the modulus");
  std::vector<ProjPoint> out;
  out.reserve(split.size());
  for (const Ideal& q : split) out.emplace_back(q, p.coords());
  return out;
}

namespace {

// One induction step: combines a prime-power target [a] mod q with an
// integer tuple c (gcd 1) representing the partial lift mod m.
std::vector<Int> combine_components(const ProjPoint& target_q, const std::vector<Int>& c,
                                    const Int& m) {
  const Int& q = target_q.ideal().modulus();
  size_t len = c.size();

  // Rotate the target row onto e_1; apply the same transform to the lift.
  std::vector<Int> a_hat = unital_lift(target_q);
  UnimodularMatrix g = row_to_e1(a_hat, target_q.ideal());
  Mat applied = g.entries();
  std::vector<Int> d = c * applied;

  if (gcd_int(d[0], m) != 1) {
    // Repair the leading coordinate with a column operation that fixes e_1:
    // a + d_0*(1 - a*x_0) is coprime to m when a vanishes at exactly the
    // primes of m missing from d_0.
    auto [gd, x] = ext_gcd_vec(d);
    if (gd != 1) throw input_error("crt_lift_point: internal gcd invariant broken");
    Int a_elt = 1;
    Ideal m_ideal(m);
    for (const auto& [prime, e] : m_ideal.factors())
      if (d[0] % prime != 0) a_elt *= prime;
    Mat adjust = Mat::identity(len);
    for (size_t i = 1; i < len; ++i) adjust.at(i, 0) = a_elt * x[i];
    d = d * adjust;
    applied = applied * adjust;
  }

  Int u = inv_mod(d[0], m);
  std::vector<Int> y(len);
  y[0] = 1;
  for (size_t i = 1; i < len; ++i)
    y[i] = crt_solve({{0, q}, {mod_floor(u * d[i], m), m}});

  // Undo every transform; gcd(y) = 1 survives the unimodular product.
  return y * unimodular_inverse(applied);
}

}  // namespace

ProjPoint crt_lift_point(const std::vector<ProjPoint>& targets) {
  if (targets.empty()) throw input_error("crt_lift_point: no targets");
  unsigned dim = targets[0].dim();
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].dim() != dim) throw input_error("crt_lift_point: mismatched dimensions");
    for (size_t j = i + 1; j < targets.size(); ++j)
      if (gcd_int(targets[i].ideal().modulus(), targets[j].ideal().modulus()) != 1)
        throw input_error("crt_lift_point: ideals are not pairwise coprime");
  }
  if (targets.size() == 1) return targets[0];

  // Work over the prime-power components of every target.
  std::vector<ProjPoint> components;
  Int total = 1;
  for (const ProjPoint& t : targets) {
    for (const Ideal& q : prime_power_split(t.ideal())) {
      components.emplace_back(q, t.coords());
      total *= q.modulus();
    }
  }
  std::vector<std::pair<Int, unsigned>> total_factors;
  for (const ProjPoint& c : components) total_factors.push_back(c.ideal().factors()[0]);
  std::sort(total_factors.begin(), total_factors.end());
  Ideal total_ideal(total, std::move(total_factors));

  if (components.empty())
    return ProjPoint(total_ideal, std::vector<Int>(dim + 1, 0));  // all unit ideals

  std::vector<Int> lift = unital_lift(components.back());
  Int m = components.back().ideal().modulus();
  for (size_t i = components.size() - 1; i-- > 0;) {
    lift = combine_components(components[i], lift, m);
    m *= components[i].ideal().modulus();
  }
  ProjPoint result(total_ideal, lift);
  for (const ProjPoint& t : targets) {
    ProjPoint reduced(t.ideal(), result.coords());
    if (!points_equal(reduced, t))
      throw input_error("crt_lift_point: lift failed to reduce to a target");
  }
  return result;
}

ProjPoint act_on_point(const UnimodularMatrix& g, const ProjPoint& p) {
  if (g.size() != p.coords().size())
    throw input_error("act_on_point: matrix size does not match point dimension");
  std::vector<Int> moved = p.coords() * g.inverse().entries();
  return ProjPoint(p.ideal(), std::move(moved));
}

}  // namespace pfz
