#include "algebra_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "error.hpp"
#include "json.hpp"

namespace solvgeom {

using nlohmann::json;

MetricLieAlgebra algebra_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "algebra document must be a JSON object");

  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0) {
    throw Error(ErrorCode::InvalidAlgebra, "\"dim\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) throw Error(ErrorCode::InvalidAlgebra, "\"labels\" must list dim strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw Error(ErrorCode::InvalidAlgebra, "\"labels\" must list dim strings");
      labels.push_back(s.get<std::string>());
    }
  }

  if (!doc.contains("structure") || !doc["structure"].is_array()) {
    throw Error(ErrorCode::InvalidAlgebra, "\"structure\" must be an array of [i, j, k, value] entries");
  }
  std::vector<double> c(n * n * n, 0.0);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : doc["structure"]) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer() || !e[3].is_number()) {
      throw Error(ErrorCode::InvalidAlgebra, "structure entries must be [i, j, k, value]");
    }
    const auto i = e[0].get<long long>(), j = e[1].get<long long>(), k = e[2].get<long long>();
    const auto in_range = [n](long long v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (!in_range(i) || !in_range(j) || !in_range(k)) {
      throw Error(ErrorCode::InvalidAlgebra, "structure index out of range");
    }
    if (i >= j) throw Error(ErrorCode::InvalidAlgebra, "structure entries must have i < j (antisymmetry is implied)");
    const auto key = std::make_tuple(std::size_t(i), std::size_t(j), std::size_t(k));
    if (!seen.insert(key).second) throw Error(ErrorCode::InvalidAlgebra, "duplicate structure entry");
    const double v = e[3].get<double>();
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidAlgebra, "structure constants must be finite");
    c[(i * n + j) * n + k] = v;
    c[(j * n + i) * n + k] = -v;
  }

  if (!doc.contains("gram") || !doc["gram"].is_array() || doc["gram"].size() != n) {
    throw Error(ErrorCode::InvalidAlgebra, "\"gram\" must be a dim x dim array");
  }
  Eigen::MatrixXd gram(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["gram"][i];
    if (!row.is_array() || row.size() != n) throw Error(ErrorCode::InvalidAlgebra, "\"gram\" must be a dim x dim array");
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) throw Error(ErrorCode::InvalidAlgebra, "\"gram\" entries must be numbers");
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j].get<double>();
    }
  }
  return MetricLieAlgebra(n, std::move(c), std::move(gram), std::move(labels));
}

MetricLieAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

std::string algebra_to_json(const MetricLieAlgebra& L, double drop_below) {
  const auto n = L.dim();
  json doc;
  doc["dim"] = n;
  doc["labels"] = L.labels();
  json structure = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double v = L.structure(i, j, k);
        if (std::abs(v) > drop_below) structure.push_back({i, j, k, v});
      }
  doc["structure"] = std::move(structure);
  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(L.gram()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    gram.push_back(std::move(row));
  }
  doc["gram"] = std::move(gram);
  return doc.dump(2) + "\n";
}

void save_algebra(const MetricLieAlgebra& L, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
  out << algebra_to_json(L);
}

}  // namespace solvgeom
