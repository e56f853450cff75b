#include "json_io.hpp"

namespace pfz {

namespace {

const char* equation_name(CertificateEquation e) {
  switch (e) {
    case CertificateEquation::determinant: return "determinant";
    case CertificateEquation::sum_product: return "sum_product";
    case CertificateEquation::minor_gcd: return "minor_gcd";
  }
  return "unknown";
}

std::vector<Int> int_vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw schema_error(std::string(what) + ": expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(int_from_json(e));
  return out;
}

Json int_vec_to_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(int_to_json(x));
  return arr;
}

}  // namespace

Json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw schema_error("not a decimal integer: " + j.get<std::string>());
    }
  }
  throw schema_error("expected an integer (number or decimal string)");
}

Json point_to_json(const ProjPoint& p) {
  Json j;
  j["modulus"] = int_to_json(p.ideal().modulus());
  j["coords"] = int_vec_to_json(p.coords());
  return j;
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("coords"))
    throw schema_error("point: expected {\"modulus\": n, \"coords\": [...]}");
  Int n = int_from_json(j.at("modulus"));
  if (n <= 0) throw schema_error("point: modulus must be positive");
  return ProjPoint(Ideal(n), int_vec_from_json(j.at("coords"), "point coords"));
}

Json form_to_json(const CanonicalForm& f) {
  Json j;
  j["modulus"] = int_to_json(f.modulus);
  j["coords"] = int_vec_to_json(f.coords);
  return j;
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) rows.push_back(int_vec_to_json(row));
  Json j;
  j["rows"] = rows;
  return j;
}

Mat matrix_from_json(const Json& j) {
  const Json* rows = nullptr;
  if (j.is_array()) {
    rows = &j;
  } else if (j.is_object() && j.contains("rows")) {
    rows = &j.at("rows");
  } else {
    throw schema_error("matrix: expected an array of rows or {\"rows\": [...]}");
  }
  if (!rows->is_array() || rows->empty()) throw schema_error("matrix: empty row list");
  std::vector<std::vector<Int>> data;
  data.reserve(rows->size());
  for (const Json& r : *rows) data.push_back(int_vec_from_json(r, "matrix row"));
  for (const auto& r : data)
    if (r.size() != data[0].size()) throw schema_error("matrix: ragged rows");
  return Mat(data);
}

Json report_to_json(const SolveReport& r) {
  Json j;
  j["certificate"] = matrix_to_json(r.certificate)["rows"];
  j["equation"] = equation_name(r.equation);
  j["equation_value"] = int_to_json(r.equation_value);
  Json rows = Json::array();
  for (const RowCheck& check : r.rows) {
    Json row;
    row["target"] = point_to_json(check.target);
    Json achieved;
    achieved["modulus"] = int_to_json(check.target.ideal().modulus());
    achieved["coords"] = int_vec_to_json(check.achieved);
    row["achieved"] = achieved;
    row["equal"] = check.equal;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  j["pass"] = r.pass;
  return j;
}

Json image_report_to_json(const ImageReport& r) {
  Json j;
  j["domain_size"] = int_to_json(r.domain_size);
  j["codomain_size"] = int_to_json(r.codomain_size);
  j["image_size"] = int_to_json(r.image_size);
  j["surjective"] = r.surjective();
  Json missing = Json::array();
  for (const auto& tuple : r.missing) {
    Json t = Json::array();
    for (const CanonicalForm& f : tuple) t.push_back(form_to_json(f));
    missing.push_back(std::move(t));
  }
  j["missing"] = missing;
  j["missing_truncated"] = r.missing_truncated;
  return j;
}

}  // namespace pfz
