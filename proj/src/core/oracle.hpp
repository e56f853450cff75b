#ifndef PFZ_ORACLE_HPP
#define PFZ_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"
#include "projective.hpp"
#include "ring.hpp"

namespace pfz {

// Exhaustive image computation of a map into a product of projective
// spaces. Missing elements are tuples of canonical forms, one per factor,
// truncated at missing_cap.
struct ImageReport {
  Int domain_size;
  Int codomain_size;
  Int image_size;
  std::vector<std::vector<CanonicalForm>> missing;
  bool missing_truncated = false;

  bool surjective() const { return image_size == codomain_size; }
};

inline constexpr std::size_t kMissingCap = 64;

// Every k x k residue matrix with determinant 1 mod n.
std::vector<ResidueMatrix> enumerate_sl(unsigned k, const Ideal& modulus,
                                        std::uint64_t budget = kDefaultEnumBudget);

// Image of the componentwise reduction from the space mod n to the product
// of spaces over the split.
ImageReport crt_image(const Ideal& modulus, const std::vector<Ideal>& split, unsigned dim,
                      std::uint64_t budget = kDefaultEnumBudget);

// Image of the rows map from determinant-one matrices to the product of
// spaces over the moduli. Matrices over the integers are exhausted through
// their reductions mod prod n_i: the reduction of an integer matrix lands
// in SL_k there, and every residue class is hit by an integer lift.
ImageReport sigma_image(unsigned k, const std::vector<Ideal>& moduli,
                        std::uint64_t budget = kDefaultEnumBudget);

// Image of the rows map from matrices with sum of column products equal to
// one. For r = 1 the residue classes with row sum 1 mod n are exactly the
// reductions of integer solutions, so the image (and its deficit) is exact.
ImageReport sumproduct_image(unsigned r, unsigned k, const std::vector<Ideal>& moduli,
                             std::uint64_t budget = kDefaultEnumBudget);

// Image of b -> ([1+b : -b] mod p, [b : 1-b] mod q) over b in [0, pq).
ImageReport fixed_point_image(const Int& p, const Int& q);

}  // namespace pfz

#endif
