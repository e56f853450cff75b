#ifndef PFZ_JSON_IO_HPP
#define PFZ_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "matrix.hpp"
#include "oracle.hpp"
#include "projective.hpp"
#include "solvers.hpp"

namespace pfz {

using Json = nlohmann::ordered_json;

// Schema violations in otherwise well-formed JSON payloads.
class schema_error : public std::runtime_error {
 public:
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// Integers serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);
Json form_to_json(const CanonicalForm& f);

Json matrix_to_json(const Mat& m);
// Accepts either a bare array of rows or {"rows": [...]}.
Mat matrix_from_json(const Json& j);

Json report_to_json(const SolveReport& r);
Json image_report_to_json(const ImageReport& r);

}  // namespace pfz

#endif
