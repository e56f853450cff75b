#include "oracle.hpp"

#include <set>

namespace pfz {

namespace {

// Odometer over [0, n)^width; returns false when the space is exhausted.
bool advance(std::vector<Int>& tuple, const Int& n) {
  for (size_t pos = 0; pos < tuple.size(); ++pos) {
    tuple[pos] += 1;
    if (tuple[pos] < n) return true;
    tuple[pos] = 0;
  }
  return false;
}

Int pow_count(const Int& n, size_t e) {
  Int total = 1;
  for (size_t i = 0; i < e; ++i) total *= n;
  return total;
}

using FormTuple = std::vector<CanonicalForm>;

// Cartesian product of the spaces over the given ideals.
std::vector<FormTuple> product_codomain(const std::vector<Ideal>& ideals, unsigned dim,
                                        std::uint64_t budget) {
  std::vector<std::vector<CanonicalForm>> spaces;
  spaces.reserve(ideals.size());
  for (const Ideal& ideal : ideals) spaces.push_back(enumerate_space(ideal, dim, budget));
  std::vector<FormTuple> out{{}};
  for (const auto& space : spaces) {
    std::vector<FormTuple> next;
    next.reserve(out.size() * space.size());
    for (const auto& prefix : out)
      for (const CanonicalForm& f : space) {
        FormTuple t = prefix;
        t.push_back(f);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

ImageReport finish_report(const std::vector<FormTuple>& codomain,
                          const std::set<FormTuple>& image, const Int& domain_size) {
  ImageReport report;
  report.domain_size = domain_size;
  report.codomain_size = Int(codomain.size());
  report.image_size = Int(image.size());
  for (const FormTuple& t : codomain) {
    if (image.count(t)) continue;
    if (report.missing.size() == kMissingCap) {
      report.missing_truncated = true;
      break;
    }
    report.missing.push_back(t);
  }
  return report;
}

}  // namespace

std::vector<ResidueMatrix> enumerate_sl(unsigned k, const Ideal& modulus,
                                        std::uint64_t budget) {
  if (k == 0) throw input_error("enumerate_sl: k must be positive");
  const Int& n = modulus.modulus();
  if (pow_count(n, size_t(k) * k) > budget)
    throw budget_error("enumerate_sl: n^(k*k) exceeds the budget");
  std::vector<ResidueMatrix> out;
  std::vector<Int> entries(size_t(k) * k, 0);
  const Int one = mod_floor(Int(1), n);
  do {
    Mat m(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m.at(i, j) = entries[i * k + j];
    if (mod_floor(determinant(m), n) == one) out.emplace_back(modulus, m);
  } while (advance(entries, n));
  return out;
}

ImageReport crt_image(const Ideal& modulus, const std::vector<Ideal>& split, unsigned dim,
                      std::uint64_t budget) {
  std::vector<FormTuple> codomain = product_codomain(split, dim, budget);
  std::set<FormTuple> image;
  Int domain = 0;
  for (const CanonicalForm& form : enumerate_space(modulus, dim, budget)) {
    ProjPoint point(modulus, form.coords);
    FormTuple t;
    t.reserve(split.size());
    for (const ProjPoint& part : crt_reduce(point, split)) t.push_back(canonicalize(part));
    image.insert(std::move(t));
    domain += 1;
  }
  return finish_report(codomain, image, domain);
}

ImageReport sigma_image(unsigned k, const std::vector<Ideal>& moduli, std::uint64_t budget) {
  if (k < 2) throw input_error("sigma_image: k must be >= 2");
  if (moduli.size() != k) throw input_error("sigma_image: need k moduli");
  Int n_total = 1;
  for (const Ideal& ideal : moduli) n_total *= ideal.modulus();
  Ideal total(n_total);

  std::vector<FormTuple> codomain = product_codomain(moduli, k - 1, budget);
  std::set<FormTuple> image;
  Int domain = 0;
  for (const ResidueMatrix& m : enumerate_sl(k, total, budget)) {
    FormTuple t;
    t.reserve(k);
    bool valid = true;
    for (size_t i = 0; i < k && valid; ++i) {
      std::vector<Int> row = m.entries().row(i);
      const Int& ni = moduli[i].modulus();
      Int g = ni;
      for (Int& e : row) {
        e = mod_floor(e, ni);
        g = gcd_int(g, e);
      }
      if (g != 1 && ni != 1) {
        valid = false;  // row of an SL matrix is always unital; defensive
        break;
      }
      t.push_back(canonicalize(ProjPoint(moduli[i], row)));
    }
    if (valid) image.insert(std::move(t));
    domain += 1;
  }
  return finish_report(codomain, image, domain);
}

ImageReport sumproduct_image(unsigned r, unsigned k, const std::vector<Ideal>& moduli,
                             std::uint64_t budget) {
  if (r == 0 || k < 2) throw input_error("sumproduct_image: need r >= 1 and k >= 2");
  if (moduli.size() != r) throw input_error("sumproduct_image: need r moduli");
  Int n_total = 1;
  for (const Ideal& ideal : moduli) n_total *= ideal.modulus();

  if (pow_count(n_total, size_t(r) * k) > budget)
    throw budget_error("sumproduct_image: domain slice exceeds the budget");

  std::vector<FormTuple> codomain = product_codomain(moduli, k - 1, budget);
  std::set<FormTuple> image;
  Int domain = 0;
  std::vector<Int> entries(size_t(r) * k, 0);
  const Int one = mod_floor(Int(1), n_total);
  do {
    Int total = 0;
    for (size_t j = 0; j < k; ++j) {
      Int prod = 1;
      for (size_t i = 0; i < r; ++i) prod *= entries[i * k + j];
      total += prod;
    }
    if (mod_floor(total, n_total) != one) continue;
    domain += 1;
    FormTuple t;
    t.reserve(r);
    bool valid = true;
    for (size_t i = 0; i < r && valid; ++i) {
      std::vector<Int> row(entries.begin() + i * k, entries.begin() + (i + 1) * k);
      const Int& ni = moduli[i].modulus();
      Int g = ni;
      for (Int& e : row) {
        e = mod_floor(e, ni);
        g = gcd_int(g, e);
      }
      if (g != 1 && ni != 1) {
        valid = false;
        break;
      }
      t.push_back(canonicalize(ProjPoint(moduli[i], row)));
    }
    if (valid) image.insert(std::move(t));
  } while (advance(entries, n_total));
  return finish_report(codomain, image, domain);
}

ImageReport fixed_point_image(const Int& p, const Int& q) {
  if (!is_prime_u64(p) || !is_prime_u64(q) || p == q)
    throw input_error("fixed_point_image: p and q must be distinct primes");
  Ideal ip(p), iq(q);
  std::vector<FormTuple> codomain = product_codomain({ip, iq}, 1, kDefaultEnumBudget);
  std::set<FormTuple> image;
  Int pq = p * q;
  for (Int b = 0; b < pq; ++b) {
    ProjPoint first(ip, {1 + b, -b});
    ProjPoint second(iq, {b, 1 - b});
    image.insert({canonicalize(first), canonicalize(second)});
  }
  return finish_report(codomain, image, pq);
}

}  // namespace pfz
