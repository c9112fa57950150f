#include "opmeans/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace opmeans {

namespace {

GeneralMatrix parse_rows(const json& j, bool square) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw ParseError("matrix JSON requires a \"rows\" array");
  }
  const json& rows = j.at("rows");
  const auto n = rows.size();
  if (n == 0) throw ParseError("matrix JSON has no rows");
  if (!rows.at(0).is_array() || rows.at(0).empty()) {
    throw ParseError("matrix JSON rows must be non-empty arrays");
  }
  const auto m = rows.at(0).size();
  if (square && j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() != static_cast<long long>(n)) {
      throw ParseError("matrix JSON \"dim\" does not match the number of rows");
    }
  }
  GeneralMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || row.size() != m) {
      throw ParseError("matrix JSON row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!row.at(k).is_number()) {
        throw ParseError("matrix JSON entry (" + std::to_string(i) + "," + std::to_string(k) +
                         ") is not a number");
      }
      out(i, k) = row.at(k).get<double>();
      if (!std::isfinite(out(i, k))) throw ParseError("matrix JSON entry is not finite");
    }
  }
  if (square && n != m) {
    throw ParseError("matrix JSON must be square, got " + std::to_string(n) + "x" +
                     std::to_string(m));
  }
  return out;
}

}  // namespace

SymMatrix sym_matrix_from_json(const json& j) {
  const GeneralMatrix m = parse_rows(j, true);
  const bool strict = j.contains("strict") && j.at("strict").is_boolean() && j.at("strict").get<bool>();
  if (strict) {
    const double asym = (m - m.transpose()).norm();
    const double scale = std::max(1.0, spectral_norm(m));
    if (asym > kStrictSymmetryRelTol * scale) {
      std::ostringstream msg;
      msg << "matrix is not symmetric (||M - M^T||_F = " << asym << ")";
      throw ParseError(msg.str());
    }
  }
  return SymMatrix(m);
}

GeneralMatrix general_matrix_from_json(const json& j) { return parse_rows(j, false); }

json to_json(const GeneralMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  json out;
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["shape"] = {m.rows(), m.cols()};
  }
  out["rows"] = std::move(rows);
  return out;
}

json to_json(const SymMatrix& m) { return to_json(m.matrix()); }

SymMatrix read_sym_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  return sym_matrix_from_json(j);
}

}  // namespace opmeans
