#ifndef PFZ_BIGINT_HPP
#define PFZ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pfz {

// Exact arbitrary-precision integer used everywhere. Diagonal lifts work with
// expansions up to n^k, which overflows any fixed width.
using Int = boost::multiprecision::cpp_int;

// Raised when an input violates a documented precondition.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an enumeration would exceed the configured budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Representative of x mod m in [0, m). Requires m >= 1.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int gcd_vec(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

}  // namespace pfz

#endif
