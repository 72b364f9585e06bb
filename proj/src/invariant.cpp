#include "curvelink/invariant.hpp"

#include "curvelink/checked.hpp"
#include "curvelink/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curvelink::invariant {

namespace {

std::size_t generator_index(const QuotientContext& ctx, const std::string& id) {
  auto it = std::find(ctx.generator_ids.begin(), ctx.generator_ids.end(), id);
  if (it == ctx.generator_ids.end()) throw InvalidArgument("component '" + id + "' is not in the complement");
  return static_cast<std::size_t>(it - ctx.generator_ids.begin());
}

bool in_list(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void check_label_target(const QuotientContext& ctx, const std::string& id) {
  if (ctx.meridians.contains(id)) return;
  if (in_list(ctx.split.support, id))
    throw InvalidArgument("label '" + id + "' names a support component of cycle '" + ctx.cycle.name +
                          "'; label it dropped");
  throw InvalidArgument("label '" + id + "' is not a component of the curve");
}

} // namespace

QuotientContext indeterminacy_subgroup(const curve::CurveCombinatorics& c, const curve::CycleSpec& cycle) {
  QuotientContext ctx;
  ctx.curve = c;
  ctx.cycle = cycle;
  ctx.split = curve::supports(cycle, c);
  ctx.projection_contractible = curve::is_contractible(cycle.projection, curve::incidence_graph(c));

  const std::size_t n = ctx.split.complement.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& comp = c.component(ctx.split.complement[k]);
    ctx.generator_ids.push_back(comp.id);
    ctx.generator_labels.push_back(comp.meridian);
    ctx.meridians.emplace(comp.id, GroupElement::unit(n, k));
  }

  IntMatrix rel(0, n);
  if (n > 0) {
    std::vector<std::int64_t> degrees;
    for (const auto& id : ctx.generator_ids) degrees.push_back(c.component(id).degree);
    rel.append_row(degrees);
  }
  ctx.h1_complement = std::make_shared<const FgAbelianGroup>(n, rel);

  for (const auto& d : ctx.split.internal_support) {
    for (const auto& p : c.points()) {
      if (!p.is_on(d)) continue;
      GroupElement g = GroupElement::zero(n);
      for (std::size_t k = 0; k < n; ++k)
        if (p.is_on(ctx.generator_ids[k])) g.coeffs[k] = p.local_linking_number(ctx.generator_ids[k], d);
      if (g.is_zero_vector()) continue;
      if (std::find(ctx.indeterminacy_generators.begin(), ctx.indeterminacy_generators.end(), g) ==
          ctx.indeterminacy_generators.end())
        ctx.indeterminacy_generators.push_back(std::move(g));
    }
  }
  ctx.indeterminacy = std::make_shared<const Subgroup>(ctx.h1_complement, ctx.indeterminacy_generators);
  ctx.quotient = std::make_shared<const FgAbelianGroup>(ctx.h1_complement->quotient_by(ctx.indeterminacy_generators));
  return ctx;
}

GroupElement realization_class(const QuotientContext& ctx, const curve::Realization& r) {
  if (const auto* direct = std::get_if<curve::DirectClass>(&r)) {
    GroupElement e = GroupElement::zero(ctx.generator_count());
    for (const auto& [id, coeff] : direct->coefficients) {
      check_label_target(ctx, id);
      e.coeffs[generator_index(ctx, id)] = checked::add(e.coeffs[generator_index(ctx, id)], coeff);
    }
    return e;
  }
  const auto& br = std::get<curve::BraidRealization>(r);
  const auto partition = braid::closure_components(br.word);
  const auto dot = braid::gamma_dot(br.word, partition, br.labeling);
  for (const auto& [id, lk] : dot) {
    const auto* name = std::get_if<std::string>(&br.labeling.assignment().at(id));
    if (name != nullptr) check_label_target(ctx, *name);
  }
  return braid::rho_image(dot, br.labeling, ctx.generator_count(), ctx.meridians);
}

// ---- linking sets -----------------------------------------------------------

LinkingSet::LinkingSet(std::shared_ptr<const FgAbelianGroup> ambient, GroupElement offset,
                       std::vector<GroupElement> subgroup_generators, bool zero_excluded)
    : ambient_(ambient), offset_(ambient->canonicalize(offset)), subgroup_(ambient, std::move(subgroup_generators)),
      zero_excluded_(zero_excluded) {}

bool LinkingSet::contains(const GroupElement& e) const {
  if (zero_excluded_ && ambient_->is_zero(e)) return false;
  return subgroup_.contains(e - offset_);
}

std::vector<GroupElement> LinkingSet::enumerate(std::size_t limit) const {
  if (!is_finite()) throw InvalidArgument("linking set in an infinite group cannot be enumerated");
  std::vector<std::pair<std::vector<std::int64_t>, GroupElement>> keyed;
  for (const auto& s : subgroup_.elements(limit)) {
    GroupElement e = ambient_->canonicalize(s + offset_);
    if (zero_excluded_ && ambient_->is_zero(e)) continue;
    keyed.emplace_back(ambient_->canonical_coordinates(e), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<GroupElement> out;
  out.reserve(keyed.size());
  for (auto& [k, e] : keyed) out.push_back(std::move(e));
  return out;
}

bool LinkingSet::equals(const LinkingSet& other) const {
  if (!same_presentation(*ambient_, *other.ambient_))
    throw InvalidArgument("linking sets live in differently presented groups");
  if (is_finite()) {
    auto mine = enumerate();
    auto theirs = other.enumerate();
    if (mine.size() != theirs.size()) return false;
    std::set<std::vector<std::int64_t>> a;
    std::set<std::vector<std::int64_t>> b;
    for (const auto& e : mine) a.insert(ambient_->canonical_coordinates(e));
    for (const auto& e : theirs) b.insert(ambient_->canonical_coordinates(e));
    return a == b;
  }
  // Infinite ambient: compare cosets, then the treatment of 0.
  const Subgroup theirs(ambient_, other.subgroup_.generators());
  if (!subgroup_.same_as(theirs)) return false;
  if (!subgroup_.contains(other.offset_ - offset_)) return false;
  const bool zero_in_coset = subgroup_.contains(-offset_);
  return !zero_in_coset || zero_excluded_ == other.zero_excluded_;
}

LinkingSet LinkingSet::image(const Homomorphism& phi) const {
  std::vector<GroupElement> gens;
  for (const auto& g : subgroup_.generators()) gens.push_back(phi(g));
  return LinkingSet(phi.target_ptr(), phi(offset_), std::move(gens), zero_excluded_);
}

LinkingSetResult linking_set(const QuotientContext& ctx, const std::optional<GroupElement>& gamma_hat,
                             const std::vector<GroupElement>& basis_images) {
  const auto& q = ctx.quotient;
  IntMatrix kernel = free_map_kernel(*q, basis_images);
  if (!ctx.projection_contractible) {
    if (!gamma_hat)
      throw InvalidArgument("cycle '" + ctx.cycle.name + "' has a non-contractible projection but no class of its own");
    return {LinkingSet(q, *gamma_hat, basis_images, false), LinkingCase::NonContractible, std::move(kernel)};
  }
  if (!ctx.single_component_support())
    throw DecomposeCycle("cycle '" + ctx.cycle.name +
                         "' has a contractible projection through several components; decompose it first");
  if (basis_images.empty())
    throw InvalidArgument("cycle '" + ctx.cycle.name + "' lies on a rational component: no minimal cycles");
  const bool exclude_zero = kernel.rows() == 0;
  return {LinkingSet(q, GroupElement::zero(q->generator_count()), basis_images, exclude_zero),
          LinkingCase::SingleComponent, std::move(kernel)};
}

LinkingSet conjugate_linking_set(const LinkingSet& s) {
  std::vector<GroupElement> gens;
  for (const auto& g : s.subgroup().generators()) gens.push_back(-g);
  return LinkingSet(s.ambient_ptr(), -s.offset(), std::move(gens), s.zero_excluded());
}

bool same_presentation(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  if (a.generator_count() != b.generator_count()) return false;
  for (std::size_t i = 0; i < a.relations().rows(); ++i)
    if (!b.is_zero(GroupElement(a.relations().row_vector(i)))) return false;
  for (std::size_t i = 0; i < b.relations().rows(); ++i)
    if (!a.is_zero(GroupElement(b.relations().row_vector(i)))) return false;
  return true;
}

// ---- epsilon signature ------------------------------------------------------

std::array<int, 3> EpsilonSignature::canonical() const {
  std::array<int, 3> best = counts;
  for (int r = 1; r < 3; ++r) {
    std::array<int, 3> rot{counts[r % 3], counts[(r + 1) % 3], counts[(r + 2) % 3]};
    best = std::min(best, rot);
  }
  return best;
}

std::string EpsilonSignature::to_string() const {
  const auto c = canonical();
  std::ostringstream os;
  os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
  return os.str();
}

bool has_epsilon_shape(const FgAbelianGroup& g) {
  const std::size_t n = g.generator_count();
  if (n == 0) return false;
  IntMatrix rel(0, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> row(n, 0);
    row[k] = 3;
    rel.append_row(row);
  }
  rel.append_row(std::vector<std::int64_t>(n, 1));
  return same_presentation(g, FgAbelianGroup(n, rel));
}

EpsilonSignature epsilon_signature(const FgAbelianGroup& quotient, const GroupElement& e) {
  if (!has_epsilon_shape(quotient))
    throw InvalidArgument("epsilon signature needs a quotient of the form (Z_3)^n / <sum x_k>, got " +
                          quotient.describe());
  EpsilonSignature s;
  for (auto c : e.coeffs) ++s.counts[static_cast<std::size_t>(checked::mod(c, 3))];
  return s;
}

EpsilonSignature epsilon_signature(const QuotientContext& ctx, const GroupElement& e) {
  return epsilon_signature(*ctx.quotient, e);
}

// ---- comparison -------------------------------------------------------------

Homomorphism natural_isomorphism(const QuotientContext& a, const QuotientContext& b, const curve::ComponentMap& map) {
  if (map.size() != a.curve.components().size()) throw InvalidArgument("component map has the wrong size");
  std::vector<GroupElement> images;
  for (const auto& id : a.generator_ids) {
    const std::size_t target = map.at(*a.curve.component_index(id));
    const auto& target_id = b.curve.components().at(target).id;
    if (!b.meridians.contains(target_id))
      throw InvalidArgument("map sends complement component '" + id + "' to '" + target_id +
                            "', which is not in the other complement");
    images.push_back(b.meridians.at(target_id));
  }
  return Homomorphism(a.quotient, b.quotient, std::move(images));
}

namespace {

using WalkToken = std::variant<std::size_t, curve::PointKey>;

std::vector<WalkToken> walk_tokens(const curve::CurveCombinatorics& c, const curve::Walk& w,
                                   const curve::ComponentMap& map) {
  std::vector<WalkToken> out;
  for (const auto& v : w.vertices) {
    if (v.kind == curve::Vertex::Kind::Component)
      out.emplace_back(map.at(v.index));
    else
      out.emplace_back(curve::point_key(c, c.points().at(v.index), map));
  }
  return out;
}

bool equal_up_to_rotation(const std::vector<WalkToken>& x, const std::vector<WalkToken>& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (std::size_t r = 0; r < x.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[(i + r) % x.size()] == y[i];
    if (ok) return true;
  }
  return false;
}

std::string degree_genus_multiset(const curve::CurveCombinatorics& c) {
  std::vector<std::pair<int, int>> dg;
  for (const auto& comp : c.components()) dg.emplace_back(comp.degree, comp.genus);
  std::sort(dg.begin(), dg.end());
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < dg.size(); ++i) os << (i ? ", " : "") << "deg " << dg[i].first << " g " << dg[i].second;
  os << '}';
  return os.str();
}

} // namespace

std::string describe_combinatorics_diff(const curve::CurveCombinatorics& a, const curve::CurveCombinatorics& b) {
  std::ostringstream os;
  if (a.components().size() != b.components().size())
    os << "component count " << a.components().size() << " vs " << b.components().size() << "; ";
  if (a.points().size() != b.points().size())
    os << "singular point count " << a.points().size() << " vs " << b.points().size() << "; ";
  const auto da = degree_genus_multiset(a);
  const auto db = degree_genus_multiset(b);
  if (da != db) os << "degrees/genera " << da << " vs " << db << "; ";
  std::string s = os.str();
  if (s.empty()) return "no component bijection matches the singular-point data";
  return s.substr(0, s.size() - 2);
}

std::vector<curve::ComponentMap> candidate_isomorphisms(const QuotientContext& a, const QuotientContext& b,
                                                        const ZariskiOptions& options) {
  if (curve::combinatorial_isomorphisms(a.curve, b.curve).empty())
    throw InvalidArgument("curves are not combinatorially equivalent: " + describe_combinatorics_diff(a.curve, b.curve));

  std::vector<std::pair<std::size_t, std::size_t>> pins;
  if (!options.full_search) {
    for (const auto& id : a.split.internal_support) {
      auto t = b.curve.component_index(id);
      if (!t)
        throw InvalidArgument("internal-support component '" + id +
                              "' has no counterpart of the same name; use a full search");
      pins.emplace_back(*a.curve.component_index(id), *t);
    }
  }

  const std::size_t nb = b.curve.components().size();
  curve::ComponentMap identity(nb);
  for (std::size_t i = 0; i < nb; ++i) identity[i] = i;
  const auto target_walk = walk_tokens(b.curve, b.cycle.projection, identity);

  std::vector<curve::ComponentMap> out;
  for (auto& m : curve::combinatorial_isomorphisms(a.curve, b.curve, pins))
    if (equal_up_to_rotation(walk_tokens(a.curve, a.cycle.projection, m), target_walk)) out.push_back(std::move(m));
  if (out.empty())
    throw InvalidArgument("cycles '" + a.cycle.name + "' and '" + b.cycle.name +
                          "' are not carried onto each other by any combinatorial equivalence");
  return out;
}

ZariskiResult zariski_test(const ZariskiSide& a, const ZariskiSide& b, const std::vector<curve::ComponentMap>& maps,
                           const ZariskiOptions& options) {
  const bool use_conjugate =
      !options.oriented_only && a.ctx.single_component_support() && b.ctx.single_component_support();
  const LinkingSet conj_b = conjugate_linking_set(b.lks);

  ZariskiResult result;
  for (const auto& m : maps) {
    const Homomorphism phi = natural_isomorphism(a.ctx, b.ctx, m);
    const LinkingSet moved = a.lks.image(phi);
    MapOutcome o;
    o.map = m;
    o.oriented_match = moved.equals(b.lks);
    o.conjugate_match = use_conjugate && moved.equals(conj_b);
    if (o.matched() && !result.witness) result.witness = m;
    result.outcomes.push_back(std::move(o));
  }
  result.verdict = result.witness ? Verdict::NotDistinguished : Verdict::Distinguished;
  return result;
}

} // namespace curvelink::invariant
