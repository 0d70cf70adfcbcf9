#pragma once

// JSON documents for functions, measures, sets and operator fields.
//
// Function: array of values aligned with the backend's Haar-point order; a
// value is a number or [re, im]. Measure: array of {element, weight} with
// element an index (finite) or [x, y, t] (Heisenberg).

#include <string>
#include <vector>

#include "groupft/distance_set.hpp"
#include "groupft/finite_group.hpp"
#include "groupft/heisenberg.hpp"
#include "groupft/report.hpp"
#include "groupft/transform.hpp"

namespace groupft {

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& v);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& v);

GroupFunction<FiniteGroup> function_from_json(const FiniteGroup& g, const json& doc);
GroupFunction<HeisenbergGroup> function_from_json(const HeisenbergGroup& g, const json& doc);
template <GroupBackend G>
json function_to_json(const GroupFunction<G>& f) {
  json out = json::array();
  for (const auto& z : f.values()) out.push_back(complex_to_json(z));
  return out;
}

DiscreteMeasure<FiniteGroup> measure_from_json(const FiniteGroup& g, const json& doc);
DiscreteMeasure<HeisenbergGroup> measure_from_json(const HeisenbergGroup& g, const json& doc);

/// Field document: per dual item its label, Plancherel weight, dimension,
/// operator / Hilbert–Schmidt / trace norms and (optionally) the matrix.
template <GroupBackend G>
json field_to_json(const G& g, const OperatorField& field, bool with_matrices) {
  json entries = json::array();
  for (const auto& e : field.entries) {
    json item{{"irrep", e.irrep},
              {"label", g.irrep_label(e.irrep)},
              {"weight", e.weight},
              {"dim", e.matrix.rows()},
              {"operator_norm", operator_norm(e.matrix)},
              {"hs_norm", frobenius_norm(e.matrix)},
              {"trace_norm", schatten_norm(e.matrix, 1.0)}};
    if (with_matrices) item["matrix"] = matrix_to_json(e.matrix);
    entries.push_back(std::move(item));
  }
  return json{{"version", kReportVersion},
              {"backend", g.describe()},
              {"plancherel_norm_sq", plancherel_norm_sq(field)},
              {"trace_class_norm", trace_class_norm(field)},
              {"entries", std::move(entries)}};
}

/// A set of element indices: a JSON array or {"elements": [...]}.
std::vector<std::size_t> set_from_json(const json& doc);

struct Box {
  HPoint lo;
  HPoint hi;
};
/// "x0,y0,t0,x1,y1,t1" or a JSON document {"box": [x0, y0, t0, x1, y1, t1]}.
Box box_from_string(const std::string& text);
Box box_from_json(const json& doc);

/// "0,1,5" → {0, 1, 5}.
std::vector<std::size_t> set_from_string(const std::string& text);

/// Reads a whole file into a JSON value. FormatError on I/O or parse errors.
json read_json_file(const std::string& path);

}  // namespace groupft
