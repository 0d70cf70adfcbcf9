#include "groupft/documents.hpp"

#include <fstream>
#include <sstream>

#include "groupft/errors.hpp"

namespace groupft {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw FormatError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw FormatError("not a number: '" + s + "'");
  return v;
}

HPoint point_from_json(const json& v) {
  if (!v.is_array() || v.size() != 3) throw FormatError("a Heisenberg element is [x, y, t]");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw FormatError("a complex value is a number or [re, im]");
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_array()) throw FormatError("a matrix is a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  const auto cols = static_cast<Eigen::Index>(v[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw FormatError("ragged matrix rows");
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_from_json(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

namespace {

template <GroupBackend G>
GroupFunction<G> function_from_json_impl(const G& g, const json& doc) {
  if (!doc.is_array()) throw FormatError("a function document is an array of values");
  std::vector<Complex> v;
  v.reserve(doc.size());
  for (const auto& x : doc) v.push_back(complex_from_json(x));
  return GroupFunction<G>(g, std::move(v));
}

}  // namespace

GroupFunction<FiniteGroup> function_from_json(const FiniteGroup& g, const json& doc) {
  return function_from_json_impl(g, doc);
}

GroupFunction<HeisenbergGroup> function_from_json(const HeisenbergGroup& g, const json& doc) {
  return function_from_json_impl(g, doc);
}

DiscreteMeasure<FiniteGroup> measure_from_json(const FiniteGroup& g, const json& doc) {
  return guarded("measure document", [&] {
    if (!doc.is_array()) throw FormatError("a measure document is an array of {element, weight}");
    std::vector<MeasureAtom<FiniteGroup>> atoms;
    for (const auto& a : doc) {
      const auto p = a.at("element").get<std::size_t>();
      g.check_element(p);
      atoms.push_back({p, a.at("weight").get<double>()});
    }
    return DiscreteMeasure<FiniteGroup>(g, std::move(atoms));
  });
}

DiscreteMeasure<HeisenbergGroup> measure_from_json(const HeisenbergGroup& g, const json& doc) {
  return guarded("measure document", [&] {
    if (!doc.is_array()) throw FormatError("a measure document is an array of {element, weight}");
    std::vector<MeasureAtom<HeisenbergGroup>> atoms;
    for (const auto& a : doc) atoms.push_back({point_from_json(a.at("element")), a.at("weight").get<double>()});
    return DiscreteMeasure<HeisenbergGroup>(g, std::move(atoms));
  });
}

std::vector<std::size_t> set_from_json(const json& doc) {
  return guarded("set document", [&] {
    const json& arr = doc.is_object() ? doc.at("elements") : doc;
    if (!arr.is_array()) throw FormatError("a set is an array of element indices");
    return arr.get<std::vector<std::size_t>>();
  });
}

std::vector<std::size_t> set_from_string(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("set elements are nonnegative integers, got '" + item + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

Box box_from_string(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 6) throw FormatError("a box is x0,y0,t0,x1,y1,t1");
  std::vector<double> v;
  for (const auto& p : parts) v.push_back(parse_double(p));
  return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
}

Box box_from_json(const json& doc) {
  return guarded("box document", [&] {
    const auto v = doc.at("box").get<std::vector<double>>();
    if (v.size() != 6) throw FormatError("a box is [x0, y0, t0, x1, y1, t1]");
    return Box{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace groupft
