#ifndef PFZ_SOLVERS_HPP
#define PFZ_SOLVERS_HPP

#include <optional>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"
#include "projective.hpp"
#include "ring.hpp"

namespace pfz {

// Multiplicative choice map on the monoid of prime-power products supported
// on F. Over the integers the canonical choice is the product itself.
Int sigma_monoid(const std::vector<Int>& prime_set,
                 const std::vector<std::pair<Int, unsigned>>& factorization);

// Whether x lies in (n) with order at every p in F exactly the exponent of p
// in the ideal (zero for primes outside it).
bool s_set_membership(const Int& x, const Ideal& ideal, const std::vector<Int>& prime_set);

// Per-coordinate split coord = g_i * v_i with g_i supported on the primes of
// the modulus, v_i coprime to every prime of F, and gcd over i of g_i*v_i
// equal to one. Zero coordinates are represented by the modulus itself.
struct FactoredRep {
  Ideal ideal;
  std::vector<Int> g;
  std::vector<Int> v;

  std::vector<Int> assembled() const;
};

FactoredRep rep_factor(const ProjPoint& p, const std::vector<Int>& prime_set);

// (a, b) with a*x + b*y = 1 mod n and gcd(a, b) = 1.
// Requires gcd(x, y, n) = 1.
std::pair<Int, Int> comax_bezout(const Int& x, const Int& y, const Int& modulus);

// Shifts t_i, each a multiple of n, with gcd over i of a_i + t_i equal to
// one. Requires gcd(a, n) = 1 and length >= 2.
std::vector<Int> unital_shift(const std::vector<Int>& a, const Int& modulus);

enum class CertificateEquation { determinant, sum_product, minor_gcd };

struct RowCheck {
  ProjPoint target;
  std::vector<Int> achieved;  // certificate row reduced mod the target modulus
  bool equal = false;
};

// Solver output: the integer certificate plus the re-verification performed
// on it from scratch. pass holds iff every row check succeeded and the
// defining equation evaluates to exactly one.
struct SolveReport {
  Mat certificate;
  CertificateEquation equation = CertificateEquation::determinant;
  Int equation_value;
  std::vector<RowCheck> rows;
  bool pass = false;
};

// Re-checks a certificate against its targets by independent residue
// arithmetic; never trusts the construction.
SolveReport verify_certificate(const Mat& certificate, CertificateEquation equation,
                               const std::vector<ProjPoint>& targets);

// 2x2 determinant-one certificate whose rows represent the two points.
// Requires dim-1 points with coprime moduli.
SolveReport sl2_preimage(const ProjPoint& p, const ProjPoint& q);

// k x k determinant-one certificate whose i-th row represents target i.
// Requires k >= 2 points of dim k-1 with pairwise coprime moduli.
SolveReport sigma_preimage(const std::vector<ProjPoint>& targets);

// r x k certificate with unit-gcd maximal minors, rows representing the
// targets. Pads with the smallest unused prime moduli and truncates.
SolveReport grassmann_preimage(const std::vector<ProjPoint>& targets, unsigned cols);

// r x k certificate with sum over columns of the column products equal to
// one, rows representing the targets. r = 1 is rejected: the map misses
// points there.
SolveReport sumproduct_preimage(const std::vector<ProjPoint>& targets);

}  // namespace pfz

#endif
