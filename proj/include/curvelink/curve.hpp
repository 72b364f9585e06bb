#pragma once

#include "curvelink/braid.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace curvelink::curve {

struct Component {
  std::string id;
  int degree = 1;
  int genus = 0;
  /// Name printed for this component's meridian class (e.g. "x1").
  std::string meridian;
};

/// A singular point with its incident components and the local linking number
/// lk_P(C, D) of every unordered incident pair. Several branches of one
/// component at P are folded into a single lk value per pair.
struct SingularPoint {
  std::string id;
  std::vector<std::string> incident;
  std::map<std::pair<std::string, std::string>, int> local_linking;

  bool is_on(const std::string& component) const;
  /// lk_P(a, b); 0 when the pair is not incident at this point.
  int local_linking_number(const std::string& a, const std::string& b) const;
};

std::pair<std::string, std::string> ordered_pair(const std::string& a, const std::string& b);

/// Components (degree, genus) and singular points with local linking data.
/// Identifiers are unique across components and points.
class CurveCombinatorics {
public:
  CurveCombinatorics() = default;
  CurveCombinatorics(std::vector<Component> components, std::vector<SingularPoint> points);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<SingularPoint>& points() const { return points_; }

  std::optional<std::size_t> component_index(const std::string& id) const;
  std::optional<std::size_t> point_index(const std::string& id) const;
  const Component& component(const std::string& id) const;

  /// Pairs (C, D) with sum_P lk_P(C, D) != deg C * deg D, as messages.
  std::vector<std::string> bezout_violations() const;

  /// Curve with the listed components removed. Points that joined two or more
  /// components and are left with fewer than two are dropped.
  CurveCombinatorics without(const std::vector<std::string>& removed) const;

private:
  std::vector<Component> components_;
  std::vector<SingularPoint> points_;
};

struct Vertex {
  enum class Kind { Component, Point };
  Kind kind;
  std::size_t index;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Bipartite component/point graph. Vertex ids: components first (curve
/// order), then points.
class IncidenceGraph {
public:
  IncidenceGraph(std::size_t components, std::size_t points, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t component_count() const { return components_; }
  std::size_t point_count() const { return points_; }
  std::size_t vertex_count() const { return components_ + points_; }
  /// (component index, point index), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  std::size_t vertex_id(const Vertex& v) const;
  Vertex vertex(std::size_t id) const;
  bool adjacent(const Vertex& a, const Vertex& b) const;
  const std::vector<std::size_t>& neighbours(std::size_t id) const { return adjacency_[id]; }

private:
  std::size_t components_;
  std::size_t points_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

IncidenceGraph incidence_graph(const CurveCombinatorics& c);

/// Closed walk, stored once around without repeating the start vertex.
/// A single component vertex stands for a cycle that avoids singular points.
struct Walk {
  std::vector<Vertex> vertices;
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Resolve identifiers to a walk; a trailing copy of the first vertex is
/// accepted and removed. Throws InvalidArgument for unknown ids or
/// non-adjacent consecutive vertices.
Walk make_walk(const CurveCombinatorics& c, const std::vector<std::string>& ids);
std::vector<std::string> walk_ids(const CurveCombinatorics& c, const Walk& w);

void validate_walk(const Walk& w, const IncidenceGraph& g);

/// True iff cancelling backtracks (v, u, v) -> (v), cyclically, leaves a
/// single vertex.
bool is_contractible(const Walk& w, const IncidenceGraph& g);

/// The class of a cycle (or basis cycle) in H1 of the complement of the
/// off-support subcurve: either read from a braid closure, or given directly
/// as meridian coefficients keyed by component id.
struct BraidRealization {
  braid::BraidWord word;
  braid::StrandLabeling labeling;
};
struct DirectClass {
  std::map<std::string, std::int64_t> coefficients;
};
using Realization = std::variant<BraidRealization, DirectClass>;

/// A minimal cycle declared by its projection walk.
struct CycleSpec {
  std::string name;
  Walk projection;
  std::vector<std::string> internal_support;
  /// Ordered basis names per internal-support component, 2 * genus each.
  std::vector<std::pair<std::string, std::vector<std::string>>> genus_basis;
  /// Realization name of the cycle itself (needed when the projection is not
  /// contractible).
  std::optional<std::string> own_class;
  std::map<std::string, Realization> realizations;
};

/// Checks the walk, that the internal support equals the walk's component
/// vertices, basis sizes, and that every referenced realization exists.
void validate_cycle(const CycleSpec& spec, const CurveCombinatorics& c);

struct SupportSplit {
  std::vector<std::string> internal_support;
  /// internal support plus every component through a point vertex of the walk
  std::vector<std::string> support;
  /// everything else, in curve order
  std::vector<std::string> complement;
};

SupportSplit supports(const CycleSpec& spec, const CurveCombinatorics& c);

/// image[i] = index in the target curve of source component i.
using ComponentMap = std::vector<std::size_t>;

/// Every bijection a -> b preserving degree, genus and the multiset of
/// singular-point data, in lexicographic order of the image vector.
/// `pinned` fixes image[source] = target for the listed pairs.
std::vector<ComponentMap> combinatorial_isomorphisms(const CurveCombinatorics& a, const CurveCombinatorics& b,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& pinned = {});

/// Automorphisms fixing every component in `fixed` pointwise.
std::vector<ComponentMap> combinatorial_automorphisms(const CurveCombinatorics& c,
                                                      const std::vector<std::string>& fixed = {});

/// Canonical description of a point after relabeling components by `map`:
/// sorted incident indices and sorted (i, j, lk) triples.
struct PointKey {
  std::vector<std::size_t> incident;
  std::vector<std::tuple<std::size_t, std::size_t, int>> linking;
  friend bool operator==(const PointKey&, const PointKey&) = default;
  friend auto operator<=>(const PointKey&, const PointKey&) = default;
};
PointKey point_key(const CurveCombinatorics& c, const SingularPoint& p, const ComponentMap& map);

} // namespace curvelink::curve
