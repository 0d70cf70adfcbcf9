// Group-spec document reader and writer.
//
// {
//   "name": "Z4", "order": 4, "identity": 0,
//   "mul": [[0,1,2,3], ...],            order × order element indices
//   "inverse": [0,3,2,1],
//   "irreps": [{"label": "chi0", "dim": 1,
//               "matrices": [ [[[re,im]]], ... ]}]   order × dim × dim × [re,im]
// }

#include <fstream>
#include <sstream>

#include "groupft/errors.hpp"
#include "groupft/finite_group.hpp"

namespace groupft {

namespace {

CMatrix read_matrix(const json& rows, std::size_t dim, const std::string& where) {
  if (!rows.is_array() || rows.size() != dim) {
    throw FormatError(where + ": expected " + std::to_string(dim) + " rows");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  CMatrix m(d, d);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      throw FormatError(where + ": row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& z = row[j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw FormatError(where + ": entries must be [re, im] pairs");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return m;
}

}  // namespace

FiniteGroup load_group(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("group spec: ") + e.what());
  }
  try {
    const auto order = doc.at("order").get<std::size_t>();
    auto mul = doc.at("mul").get<std::vector<std::vector<std::size_t>>>();
    if (mul.size() != order) throw FormatError("group spec: mul must have 'order' rows");
    auto inverse = doc.at("inverse").get<std::vector<std::size_t>>();
    std::vector<FiniteIrrep> irreps;
    for (const auto& item : doc.at("irreps")) {
      FiniteIrrep r;
      r.dim = item.at("dim").get<std::size_t>();
      r.label = item.value("label", "chi" + std::to_string(irreps.size()));
      const auto& mats = item.at("matrices");
      if (!mats.is_array() || mats.size() != order) {
        throw FormatError("group spec: irrep " + r.label + " needs one matrix per element");
      }
      for (std::size_t p = 0; p < order; ++p) {
        r.matrices.push_back(read_matrix(mats[p], r.dim, "group spec: irrep " + r.label));
      }
      irreps.push_back(std::move(r));
    }
    return FiniteGroup(doc.value("name", "G"), doc.at("identity").get<std::size_t>(), std::move(mul),
                       std::move(inverse), std::move(irreps));
  } catch (const json::exception& e) {
    throw FormatError(std::string("group spec: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read group spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_group(buf.str());
}

json group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  json mul = json::array();
  json inverse = json::array();
  for (std::size_t p = 0; p < n; ++p) {
    json row = json::array();
    for (std::size_t q = 0; q < n; ++q) row.push_back(g.multiply(p, q));
    mul.push_back(std::move(row));
    inverse.push_back(g.inverse(p));
  }
  json irreps = json::array();
  for (const auto& r : g.irreps()) {
    json mats = json::array();
    for (const auto& m : r.matrices) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
      }
      mats.push_back(std::move(rows));
    }
    irreps.push_back(json{{"label", r.label}, {"dim", r.dim}, {"matrices", std::move(mats)}});
  }
  return json{{"name", g.name()}, {"order", n},          {"identity", g.identity()},
              {"mul", std::move(mul)}, {"inverse", std::move(inverse)}, {"irreps", std::move(irreps)}};
}

std::string save_group(const FiniteGroup& g) { return group_to_json(g).dump(1) + "\n"; }

}  // namespace groupft
