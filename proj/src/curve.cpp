#include "curvelink/curve.hpp"

#include "curvelink/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace curvelink::curve {

std::pair<std::string, std::string> ordered_pair(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

bool SingularPoint::is_on(const std::string& component) const {
  return std::find(incident.begin(), incident.end(), component) != incident.end();
}

int SingularPoint::local_linking_number(const std::string& a, const std::string& b) const {
  auto it = local_linking.find(ordered_pair(a, b));
  return it == local_linking.end() ? 0 : it->second;
}

// ---- CurveCombinatorics -----------------------------------------------------

CurveCombinatorics::CurveCombinatorics(std::vector<Component> components, std::vector<SingularPoint> points)
    : components_(std::move(components)), points_(std::move(points)) {
  std::set<std::string> ids;
  for (auto& c : components_) {
    if (c.id.empty()) throw InvalidArgument("component with empty identifier");
    if (!ids.insert(c.id).second) throw InvalidArgument("duplicate identifier '" + c.id + "'");
    if (c.degree < 1) throw InvalidArgument("component '" + c.id + "' must have degree >= 1");
    if (c.genus < 0) throw InvalidArgument("component '" + c.id + "' must have genus >= 0");
    if (c.meridian.empty()) c.meridian = "x[" + c.id + "]";
  }
  for (const auto& p : points_) {
    if (p.id.empty()) throw InvalidArgument("singular point with empty identifier");
    if (!ids.insert(p.id).second) throw InvalidArgument("duplicate identifier '" + p.id + "'");
    if (p.incident.empty()) throw InvalidArgument("singular point '" + p.id + "' lies on no component");
    std::set<std::string> seen;
    for (const auto& c : p.incident) {
      if (!component_index(c))
        throw InvalidArgument("singular point '" + p.id + "' references unknown component '" + c + "'");
      if (!seen.insert(c).second)
        throw InvalidArgument("singular point '" + p.id + "' lists component '" + c + "' twice");
    }
    for (const auto& [pair, lk] : p.local_linking) {
      if (!p.is_on(pair.first) || !p.is_on(pair.second) || pair.first == pair.second)
        throw InvalidArgument("singular point '" + p.id + "' has linking data for a pair not incident there");
      if (lk < 1) throw InvalidArgument("local linking numbers must be positive at '" + p.id + "'");
    }
    for (std::size_t i = 0; i < p.incident.size(); ++i)
      for (std::size_t j = i + 1; j < p.incident.size(); ++j)
        if (!p.local_linking.contains(ordered_pair(p.incident[i], p.incident[j])))
          throw InvalidArgument("singular point '" + p.id + "' is missing lk(" + p.incident[i] + ", " +
                                p.incident[j] + ")");
  }
}

std::optional<std::size_t> CurveCombinatorics::component_index(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> CurveCombinatorics::point_index(const std::string& id) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].id == id) return i;
  return std::nullopt;
}

const Component& CurveCombinatorics::component(const std::string& id) const {
  auto i = component_index(id);
  if (!i) throw InvalidArgument("unknown component '" + id + "'");
  return components_[*i];
}

std::vector<std::string> CurveCombinatorics::bezout_violations() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      const auto& a = components_[i];
      const auto& b = components_[j];
      long sum = 0;
      for (const auto& p : points_) sum += p.local_linking_number(a.id, b.id);
      const long expected = static_cast<long>(a.degree) * b.degree;
      if (sum != expected) {
        std::ostringstream os;
        os << a.id << " . " << b.id << ": local linking numbers sum to " << sum << ", degrees give " << expected;
        out.push_back(os.str());
      }
    }
  return out;
}

CurveCombinatorics CurveCombinatorics::without(const std::vector<std::string>& removed) const {
  for (const auto& r : removed)
    if (!component_index(r)) throw InvalidArgument("cannot delete unknown component '" + r + "'");
  auto gone = [&](const std::string& id) { return std::find(removed.begin(), removed.end(), id) != removed.end(); };

  std::vector<Component> comps;
  for (const auto& c : components_)
    if (!gone(c.id)) comps.push_back(c);
  std::vector<SingularPoint> pts;
  for (const auto& p : points_) {
    SingularPoint q{p.id, {}, {}};
    for (const auto& c : p.incident)
      if (!gone(c)) q.incident.push_back(c);
    if (q.incident.empty() || (p.incident.size() >= 2 && q.incident.size() < 2)) continue;
    for (const auto& [pair, lk] : p.local_linking)
      if (!gone(pair.first) && !gone(pair.second)) q.local_linking.emplace(pair, lk);
    pts.push_back(std::move(q));
  }
  return CurveCombinatorics(std::move(comps), std::move(pts));
}

// ---- incidence graph --------------------------------------------------------

IncidenceGraph::IncidenceGraph(std::size_t components, std::size_t points,
                               std::vector<std::pair<std::size_t, std::size_t>> edges)
    : components_(components), points_(points), edges_(std::move(edges)), adjacency_(components + points) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidArgument("incidence graph has a repeated edge");
  for (const auto& [c, p] : edges_) {
    if (c >= components_ || p >= points_) throw InvalidArgument("incidence edge out of range");
    adjacency_[c].push_back(components_ + p);
    adjacency_[components_ + p].push_back(c);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::size_t IncidenceGraph::vertex_id(const Vertex& v) const {
  if (v.kind == Vertex::Kind::Component) {
    if (v.index >= components_) throw InvalidArgument("component vertex out of range");
    return v.index;
  }
  if (v.index >= points_) throw InvalidArgument("point vertex out of range");
  return components_ + v.index;
}

Vertex IncidenceGraph::vertex(std::size_t id) const {
  if (id < components_) return {Vertex::Kind::Component, id};
  if (id < components_ + points_) return {Vertex::Kind::Point, id - components_};
  throw InvalidArgument("vertex id out of range");
}

bool IncidenceGraph::adjacent(const Vertex& a, const Vertex& b) const {
  const auto& n = adjacency_[vertex_id(a)];
  return std::binary_search(n.begin(), n.end(), vertex_id(b));
}

IncidenceGraph incidence_graph(const CurveCombinatorics& c) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < c.points().size(); ++p)
    for (const auto& comp : c.points()[p].incident) edges.emplace_back(*c.component_index(comp), p);
  return IncidenceGraph(c.components().size(), c.points().size(), std::move(edges));
}

// ---- walks ------------------------------------------------------------------

Walk make_walk(const CurveCombinatorics& c, const std::vector<std::string>& ids) {
  Walk w;
  for (const auto& id : ids) {
    if (auto ci = c.component_index(id))
      w.vertices.push_back({Vertex::Kind::Component, *ci});
    else if (auto pi = c.point_index(id))
      w.vertices.push_back({Vertex::Kind::Point, *pi});
    else
      throw InvalidArgument("walk references unknown vertex '" + id + "'");
  }
  if (w.vertices.size() > 1 && w.vertices.front() == w.vertices.back()) w.vertices.pop_back();
  validate_walk(w, incidence_graph(c));
  return w;
}

std::vector<std::string> walk_ids(const CurveCombinatorics& c, const Walk& w) {
  std::vector<std::string> out;
  for (const auto& v : w.vertices)
    out.push_back(v.kind == Vertex::Kind::Component ? c.components().at(v.index).id : c.points().at(v.index).id);
  return out;
}

void validate_walk(const Walk& w, const IncidenceGraph& g) {
  if (w.vertices.empty()) throw InvalidArgument("empty walk");
  if (w.vertices.size() == 1) {
    if (w.vertices.front().kind != Vertex::Kind::Component)
      throw InvalidArgument("a one-vertex walk must be a component vertex");
    g.vertex_id(w.vertices.front());
    return;
  }
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const auto& a = w.vertices[i];
    const auto& b = w.vertices[(i + 1) % w.vertices.size()];
    if (!g.adjacent(a, b)) throw InvalidArgument("walk steps between non-adjacent vertices");
  }
}

bool is_contractible(const Walk& w, const IncidenceGraph& g) {
  validate_walk(w, g);
  if (w.vertices.size() == 1) return true;
  // Free reduction of the closed path v0 v1 ... v_{k-1} v0, then cyclic
  // reduction of the result. The graph is simple, so vertices determine edges.
  std::vector<Vertex> s;
  auto push = [&](const Vertex& v) {
    if (s.size() >= 2 && s[s.size() - 2] == v)
      s.pop_back();
    else
      s.push_back(v);
  };
  for (const auto& v : w.vertices) push(v);
  push(w.vertices.front());
  // s is a reduced closed path with s.front() == s.back().
  std::size_t lo = 0;
  std::size_t hi = s.size() - 1;
  while (hi - lo >= 2 && s[lo + 1] == s[hi - 1]) {
    ++lo;
    --hi;
  }
  return hi == lo;
}

// ---- cycles and supports ----------------------------------------------------

void validate_cycle(const CycleSpec& spec, const CurveCombinatorics& c) {
  validate_walk(spec.projection, incidence_graph(c));
  std::set<std::string> on_walk;
  for (const auto& v : spec.projection.vertices)
    if (v.kind == Vertex::Kind::Component) on_walk.insert(c.components().at(v.index).id);
  std::set<std::string> declared(spec.internal_support.begin(), spec.internal_support.end());
  if (declared.size() != spec.internal_support.size())
    throw InvalidArgument("cycle '" + spec.name + "' lists an internal-support component twice");
  for (const auto& id : declared) c.component(id);
  if (declared != on_walk)
    throw InvalidArgument("cycle '" + spec.name + "': internal support does not match the components on its walk");

  std::set<std::string> with_basis;
  for (const auto& [comp, basis] : spec.genus_basis) {
    if (!declared.contains(comp))
      throw InvalidArgument("cycle '" + spec.name + "' has a basis for '" + comp + "' outside its internal support");
    if (!with_basis.insert(comp).second)
      throw InvalidArgument("cycle '" + spec.name + "' gives two bases for '" + comp + "'");
    const auto expected = static_cast<std::size_t>(2 * c.component(comp).genus);
    if (basis.size() != expected) {
      std::ostringstream os;
      os << "cycle '" << spec.name << "': basis for '" << comp << "' has " << basis.size() << " elements, genus gives "
         << expected;
      throw InvalidArgument(os.str());
    }
    for (const auto& b : basis)
      if (!spec.realizations.contains(b))
        throw InvalidArgument("cycle '" + spec.name + "' references unknown realization '" + b + "'");
  }
  for (const auto& comp : declared)
    if (c.component(comp).genus > 0 && !with_basis.contains(comp))
      throw InvalidArgument("cycle '" + spec.name + "' has no basis for '" + comp + "'");
  if (spec.own_class && !spec.realizations.contains(*spec.own_class))
    throw InvalidArgument("cycle '" + spec.name + "' references unknown realization '" + *spec.own_class + "'");
}

SupportSplit supports(const CycleSpec& spec, const CurveCombinatorics& c) {
  validate_cycle(spec, c);
  std::set<std::string> support(spec.internal_support.begin(), spec.internal_support.end());
  for (const auto& v : spec.projection.vertices)
    if (v.kind == Vertex::Kind::Point)
      for (const auto& comp : c.points().at(v.index).incident) support.insert(comp);

  SupportSplit out;
  for (const auto& comp : c.components()) {
    if (std::find(spec.internal_support.begin(), spec.internal_support.end(), comp.id) != spec.internal_support.end())
      out.internal_support.push_back(comp.id);
    (support.contains(comp.id) ? out.support : out.complement).push_back(comp.id);
  }
  return out;
}

// ---- automorphisms ----------------------------------------------------------

PointKey point_key(const CurveCombinatorics& c, const SingularPoint& p, const ComponentMap& map) {
  PointKey k;
  for (const auto& comp : p.incident) k.incident.push_back(map.at(*c.component_index(comp)));
  std::sort(k.incident.begin(), k.incident.end());
  for (const auto& [pair, lk] : p.local_linking) {
    std::size_t i = map.at(*c.component_index(pair.first));
    std::size_t j = map.at(*c.component_index(pair.second));
    if (i > j) std::swap(i, j);
    k.linking.emplace_back(i, j, lk);
  }
  std::sort(k.linking.begin(), k.linking.end());
  return k;
}

namespace {

std::vector<PointKey> point_keys(const CurveCombinatorics& c, const ComponentMap& map) {
  std::vector<PointKey> keys;
  keys.reserve(c.points().size());
  for (const auto& p : c.points()) keys.push_back(point_key(c, p, map));
  std::sort(keys.begin(), keys.end());
  return keys;
}

} // namespace

std::vector<ComponentMap> combinatorial_isomorphisms(const CurveCombinatorics& a, const CurveCombinatorics& b,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& pinned) {
  const std::size_t n = a.components().size();
  std::vector<ComponentMap> out;
  if (n != b.components().size() || a.points().size() != b.points().size()) return out;

  ComponentMap identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const auto target_keys = point_keys(b, identity);

  std::vector<std::optional<std::size_t>> pin(n);
  for (const auto& [s, t] : pinned) {
    if (s >= n || t >= n) throw InvalidArgument("pinned component out of range");
    pin[s] = t;
  }

  ComponentMap image(n);
  std::vector<bool> used(n, false);
  auto compatible = [&](std::size_t s, std::size_t t) {
    const auto& x = a.components()[s];
    const auto& y = b.components()[t];
    return x.degree == y.degree && x.genus == y.genus;
  };
  auto recurse = [&](auto&& self, std::size_t s) -> void {
    if (s == n) {
      if (point_keys(a, image) == target_keys) out.push_back(image);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || !compatible(s, t) || (pin[s] && *pin[s] != t)) continue;
      used[t] = true;
      image[s] = t;
      self(self, s + 1);
      used[t] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<ComponentMap> combinatorial_automorphisms(const CurveCombinatorics& c,
                                                      const std::vector<std::string>& fixed) {
  std::vector<std::pair<std::size_t, std::size_t>> pins;
  for (const auto& id : fixed) {
    auto i = c.component_index(id);
    if (!i) throw InvalidArgument("cannot fix unknown component '" + id + "'");
    pins.emplace_back(*i, *i);
  }
  return combinatorial_isomorphisms(c, c, pins);
}

} // namespace curvelink::curve
