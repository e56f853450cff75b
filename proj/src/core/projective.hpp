#ifndef PFZ_PROJECTIVE_HPP
#define PFZ_PROJECTIVE_HPP

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace pfz {

inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t(1) << 24;

// A point of the projective space attached to (n): a tuple of k+1 residues
// admitting a unital integer lift, i.e. gcd(coords, n) = 1. Two tuples are
// identified when all 2x2 cross products a_i*b_j - a_j*b_i vanish mod n.
// For n = 1 the space is a singleton and all-zero coords are the convention.
class ProjPoint {
 public:
  // Reduces the coordinates into [0, n) and checks liftability.
  // Rejects tuples shorter than 2 and tuples with gcd(coords, n) > 1.
  ProjPoint(Ideal ideal, std::vector<Int> coords);

  const Ideal& ideal() const { return ideal_; }
  const std::vector<Int>& coords() const { return coords_; }
  unsigned dim() const { return static_cast<unsigned>(coords_.size()) - 1; }

 private:
  Ideal ideal_;
  std::vector<Int> coords_;
};

bool points_equal(const ProjPoint& a, const ProjPoint& b);

// Unique representative of an equivalence class: per prime power p^e of the
// modulus the leftmost coordinate not divisible by p is scaled to 1, and the
// per-prime-power tuples are recombined mod n. Two points are equal iff
// their canonical forms are identical.
struct CanonicalForm {
  Int modulus;
  std::vector<Int> coords;

  bool operator==(const CanonicalForm& o) const {
    return modulus == o.modulus && coords == o.coords;
  }
  bool operator<(const CanonicalForm& o) const {
    if (modulus != o.modulus) return modulus < o.modulus;
    return coords < o.coords;
  }
};

CanonicalForm canonicalize(const ProjPoint& p);

// Integer tuple congruent to the point's coordinates mod n with gcd exactly
// one (the shifts applied are multiples of n).
std::vector<Int> unital_lift(const ProjPoint& p);

// All classes of the space, one canonical form each, sorted. Throws
// budget_error when n^(dim+1) tuples exceed the budget.
std::vector<CanonicalForm> enumerate_space(const Ideal& ideal, unsigned dim,
                                           std::uint64_t budget = kDefaultEnumBudget);

// Closed-form count: prod over (p,e) of p^((e-1)k) * (p^(k+1)-1)/(p-1).
// Validated against enumerate_space; the enumeration is the ground truth.
Int cardinality(const Ideal& ideal, unsigned dim);

// Componentwise reduction along a coprime factorization of the modulus.
std::vector<ProjPoint> crt_reduce(const ProjPoint& p, const std::vector<Ideal>& split);

// Point with modulus prod n_i reducing to every target. Built by induction
// over the prime-power components: the target row is rotated onto
// (1,0,...,0), and when the leading coordinate of the partial lift shares
// factors with the remaining modulus it is repaired by the comaximality
// adjustment a + c_0*(1 - a*x_0) before the ordinary CRT step.
ProjPoint crt_lift_point(const std::vector<ProjPoint>& targets);

// Left action: coordinates are the row vector times g^-1, reduced mod n.
ProjPoint act_on_point(const UnimodularMatrix& g, const ProjPoint& p);

}  // namespace pfz

#endif
