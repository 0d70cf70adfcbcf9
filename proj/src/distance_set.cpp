#include "groupft/distance_set.hpp"

#include <array>
#include <deque>
#include <sstream>

namespace groupft {

std::optional<PositivityWitness<FiniteGroup>> positivity_witness(const FiniteGroup& g, const std::vector<double>& h,
                                                                 const DifferenceOptions& opts) {
  const double he = h.at(g.identity());
  if (!(he > opts.finite_threshold)) return std::nullopt;
  PositivityWitness<FiniteGroup> w;
  w.point = g.identity();
  w.density = he;
  w.threshold = opts.finite_threshold;
  for (std::size_t p = 0; p < h.size(); ++p) {
    if (h[p] > opts.finite_threshold) w.neighborhood.push_back(p);
  }
  return w;
}

std::optional<PositivityWitness<HeisenbergGroup>> positivity_witness(const HeisenbergGroup& g,
                                                                     const std::vector<double>& h,
                                                                     const DifferenceOptions& opts) {
  const std::size_t start = g.haar_index(0, 0, 0);
  const double he = h.at(start);
  if (!(he > 0.0)) return std::nullopt;
  PositivityWitness<HeisenbergGroup> w;
  w.point = g.identity();
  w.density = he;
  w.threshold = opts.threshold_ratio * he;

  std::vector<bool> seen(h.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  constexpr std::array<std::array<long, 3>, 6> steps{
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    w.neighborhood.push_back(i);
    const auto c = g.haar_coords(i);
    for (const auto& s : steps) {
      const long ix = c.ix + s[0], iy = c.iy + s[1], it = c.it + s[2];
      if (!g.on_lattice(ix, iy, it)) continue;
      const std::size_t j = g.haar_index(ix, iy, it);
      if (seen[j] || !(h[j] > w.threshold)) continue;
      seen[j] = true;
      queue.push_back(j);
    }
  }
  std::sort(w.neighborhood.begin(), w.neighborhood.end());
  return w;
}

DiscreteMeasure<FiniteGroup> indicator_measure(const FiniteGroup& g, const std::vector<std::size_t>& set) {
  if (set.empty()) throw DomainError("the set A is empty");
  std::vector<bool> seen(g.order(), false);
  std::vector<MeasureAtom<FiniteGroup>> atoms;
  for (std::size_t p : set) {
    g.check_element(p);
    if (seen[p]) throw DomainError("element " + std::to_string(p) + " appears twice in the set");
    seen[p] = true;
    atoms.push_back({p, g.haar_weight(p)});
  }
  return DiscreteMeasure<FiniteGroup>(g, std::move(atoms));
}

DiscreteMeasure<HeisenbergGroup> box_measure(const HeisenbergGroup& g, const HPoint& lo, const HPoint& hi) {
  if (!(lo.x <= hi.x && lo.y <= hi.y && lo.t <= hi.t)) throw DomainError("box corners must satisfy lo <= hi");
  const double slack = g.config().snap_tolerance;
  auto inside = [slack](double v, double a, double b) { return v >= a - slack && v <= b + slack; };
  std::vector<MeasureAtom<HeisenbergGroup>> atoms;
  for (std::size_t i = 0; i < g.haar_size(); ++i) {
    const HPoint p = g.haar_point(i);
    if (inside(p.x, lo.x, hi.x) && inside(p.y, lo.y, hi.y) && inside(p.t, lo.t, hi.t)) {
      atoms.push_back({p, g.haar_weight(i)});
    }
  }
  if (atoms.empty()) throw DomainError("the box contains no Haar lattice point");
  return DiscreteMeasure<HeisenbergGroup>(g, std::move(atoms));
}

json element_to_json(const FiniteGroup&, std::size_t p) { return p; }

json element_to_json(const HeisenbergGroup&, const HPoint& p) { return json::array({p.x, p.y, p.t}); }

std::string density_csv(const FiniteGroup&, const std::vector<double>& h) {
  std::ostringstream os;
  os.precision(17);
  os << "element,h\n";
  for (std::size_t p = 0; p < h.size(); ++p) os << p << ',' << h[p] << '\n';
  return os.str();
}

std::string density_csv(const HeisenbergGroup& g, const std::vector<double>& h) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y,t,h\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    const HPoint p = g.haar_point(i);
    os << p.x << ',' << p.y << ',' << p.t << ',' << h[i] << '\n';
  }
  return os.str();
}

}  // namespace groupft
