#include "curvelink/pipeline.hpp"

#include "curvelink/checked.hpp"
#include "curvelink/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curvelink::pipeline {

std::size_t CompareReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(maps.begin(), maps.end(), [](const MapSummary& m) { return !m.oriented_match && !m.conjugate_match; }));
}

std::string format_element(std::span<const std::int64_t> coeffs, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    const auto mag = checked::abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag << ' ';
    os << (k < labels.size() ? labels[k] : "g" + std::to_string(k));
    first = false;
  }
  return first ? "0" : os.str();
}

GroupElement short_representative(const FgAbelianGroup& q, const GroupElement& e) {
  if (!invariant::has_epsilon_shape(q)) return q.canonicalize(e);
  std::optional<GroupElement> best;
  std::size_t best_nnz = 0;
  for (std::int64_t shift = 0; shift < 3; ++shift) {
    GroupElement w = GroupElement::zero(e.size());
    std::size_t nnz = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const auto r = checked::mod(checked::add(e.coeffs[k], shift), 3);
      w.coeffs[k] = r == 2 ? -1 : r;
      nnz += r != 0 ? 1 : 0;
    }
    if (!best || nnz < best_nnz || (nnz == best_nnz && w > *best)) {
      best = w;
      best_nnz = nnz;
    }
  }
  return *best;
}

namespace {

/// For the (Z_3)^n / <sum> shape: offset + sum c_i basis_i with c_i in
/// {-1, 0, 1}, fewest nonzero c_i first, coordinates reduced into {-1, 0, 1}.
/// This reproduces the way classes are written as combinations of the basis
/// images. Other shapes fall back to short_representative.
GroupElement display_representative(const FgAbelianGroup& q, const GroupElement& e, const GroupElement& offset,
                                    const std::vector<GroupElement>& basis) {
  if (!invariant::has_epsilon_shape(q) || basis.size() > 12) return short_representative(q, e);
  const std::size_t k = basis.size();
  std::vector<std::vector<std::int64_t>> tuples;
  std::vector<std::int64_t> t(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t count = 0; count < total; ++count) {
    std::size_t rest = count;
    for (std::size_t i = k; i-- > 0;) {
      const auto digit = static_cast<std::int64_t>(rest % 3);
      t[i] = digit == 2 ? -1 : digit;
      rest /= 3;
    }
    tuples.push_back(t);
  }
  auto nnz = [](const std::vector<std::int64_t>& v) { return std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }); };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
    if (nnz(a) != nnz(b)) return nnz(a) < nnz(b);
    return a > b;
  });
  for (const auto& c : tuples) {
    GroupElement x = offset;
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] != 0) x += c[i] * basis[i];
    if (!q.equal(x, e)) continue;
    for (auto& v : x.coeffs) {
      const auto r = checked::mod(v, 3);
      v = r == 2 ? -1 : r;
    }
    return x;
  }
  return short_representative(q, e);
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

bool is_line_arrangement(const curve::CurveCombinatorics& c) {
  return std::all_of(c.components().begin(), c.components().end(),
                     [](const curve::Component& x) { return x.degree == 1 && x.genus == 0; });
}

} // namespace

fixture::FixtureDocument apply_deletions(const fixture::FixtureDocument& doc, const std::vector<std::string>& deletions) {
  if (deletions.empty()) return doc;
  fixture::FixtureDocument out;
  out.metadata = doc.metadata;
  out.curve = doc.curve.without(deletions);

  for (const auto& [name, r] : doc.realizations) {
    if (const auto* b = std::get_if<curve::BraidRealization>(&r)) {
      out.realizations.emplace(name, curve::BraidRealization{b->word, b->labeling.with_dropped(deletions)});
    } else {
      curve::DirectClass d = std::get<curve::DirectClass>(r);
      for (const auto& id : deletions) d.coefficients.erase(id);
      out.realizations.emplace(name, std::move(d));
    }
  }

  for (const auto& c : doc.cycles) {
    const auto ids = curve::walk_ids(doc.curve, c.projection);
    if (std::any_of(c.internal_support.begin(), c.internal_support.end(),
                    [&](const std::string& s) { return contains(deletions, s); }))
      continue;
    curve::CycleSpec spec = c;
    try {
      spec.projection = curve::make_walk(out.curve, ids);
    } catch (const InvalidArgument&) {
      continue;
    }
    spec.realizations = out.realizations;
    out.cycles.push_back(std::move(spec));
  }
  return out;
}

Computation run_pipeline(const fixture::FixtureDocument& doc, const std::string& cycle_name,
                         const std::vector<std::string>& deletions, const Options& options) {
  const auto& original = doc.cycle(cycle_name);
  for (const auto& id : deletions) {
    if (!doc.curve.component_index(id)) throw InvalidArgument("cannot delete unknown component '" + id + "'");
    if (contains(original.internal_support, id))
      throw InvalidArgument("cannot delete '" + id + "': it carries cycle '" + cycle_name + "'");
  }
  const auto derived = apply_deletions(doc, deletions);
  const auto names = derived.cycle_names();
  if (!contains(names, cycle_name))
    throw InvalidArgument("cycle '" + cycle_name + "' passes through a point removed by the deletion");

  if (options.check_bezout) {
    const auto bad = derived.curve.bezout_violations();
    if (!bad.empty()) throw InvalidArgument("Bezout check failed: " + bad.front());
  }

  const auto& spec = derived.cycle(cycle_name);
  Computation out{invariant::indeterminacy_subgroup(derived.curve, spec), std::nullopt, {}};
  const auto& ctx = out.ctx;
  const auto& q = *ctx.quotient;
  auto& rep = out.report;

  rep.cycle = cycle_name;
  rep.deleted = deletions;
  rep.internal_support = ctx.split.internal_support;
  rep.support = ctx.split.support;
  rep.complement = ctx.split.complement;
  rep.generator_labels = ctx.generator_labels;
  rep.projection_contractible = ctx.projection_contractible;
  rep.h1 = ctx.h1_complement->describe();
  rep.h1_invariant_factors = ctx.h1_complement->invariant_factors();
  rep.quotient_invariant_factors = q.invariant_factors();
  rep.quotient = q.describe();
  for (const auto& g : ctx.indeterminacy_generators) rep.indeterminacy.push_back(g.coeffs);

  std::vector<GroupElement> images;
  for (const auto& [comp, basis] : spec.genus_basis) {
    for (const auto& name : basis) {
      GroupElement raw;
      try {
        raw = invariant::realization_class(ctx, spec.realizations.at(name));
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("basis element '" + name + "': " + e.what());
      }
      GroupElement canon = q.canonicalize(raw);
      rep.basis.push_back({comp, name, raw.coeffs, canon.coeffs, short_representative(q, raw).coeffs});
      images.push_back(std::move(canon));
    }
  }
  std::optional<GroupElement> gamma;
  if (spec.own_class) {
    gamma = invariant::realization_class(ctx, spec.realizations.at(*spec.own_class));
    rep.gamma_hat = gamma->coeffs;
  }

  out.lks = invariant::linking_set(ctx, gamma, images);
  const auto& lks = *out.lks;
  rep.linking_case = lks.kind == invariant::LinkingCase::NonContractible ? "non-contractible" : "single-component";
  rep.zero_excluded = lks.set.zero_excluded();
  for (std::size_t i = 0; i < lks.kernel.rows(); ++i) rep.kernel.push_back(lks.kernel.row_vector(i));
  rep.finite = lks.set.is_finite();
  rep.epsilon_applicable = invariant::has_epsilon_shape(q);
  if (rep.finite) {
    std::vector<GroupElement> raw_basis;
    for (const auto& b : rep.basis) raw_basis.emplace_back(b.raw);
    const GroupElement raw_offset = gamma ? *gamma : GroupElement::zero(q.generator_count());
    for (const auto& e : lks.set.enumerate()) {
      const auto s = display_representative(q, e, raw_offset, raw_basis);
      Member m{s.coeffs, std::nullopt};
      if (rep.epsilon_applicable) m.epsilon = invariant::epsilon_signature(q, s).counts;
      rep.members.push_back(std::move(m));
    }
  }

  if (lks.kind == invariant::LinkingCase::SingleComponent && !rep.kernel.empty())
    rep.notes.push_back("[0] belongs to the linking set: the nonzero coefficient tuple " + join(rep.kernel.front()) +
                        " maps to 0; tables listing only nonzero tuples' classes omit it");

  if (is_line_arrangement(derived.curve)) {
    const auto check = invariant::inner_cyclic_equivalence_check(derived.curve, spec);
    InnerCyclicSummary s;
    s.quotient_nontrivial = check.quotient_nontrivial;
    s.moduli = check.moduli;
    if (check.witness) {
      s.witness_modulus = check.witness->modulus;
      s.witness_values = check.witness->values;
      if (gamma) s.i_invariant = invariant::i_invariant(ctx, *check.witness, *gamma);
    }
    rep.inner_cyclic = s;
    rep.notes.push_back("inner-cyclic condition (3) is read as: the product of the character over lines through the "
                        "point equals 1");
  }
  return out;
}

Comparison compare(const fixture::FixtureDocument& doc_a, const std::vector<std::string>& deletions_a,
                   const fixture::FixtureDocument& doc_b, const std::vector<std::string>& deletions_b,
                   const std::string& cycle_a, const std::string& cycle_b, const Options& options) {
  Computation a = run_pipeline(doc_a, cycle_a, deletions_a, options);
  Computation b = run_pipeline(doc_b, cycle_b, deletions_b, options);
  const invariant::ZariskiOptions zopt{options.oriented_only, options.full_search};
  const auto maps = invariant::candidate_isomorphisms(a.ctx, b.ctx, zopt);
  auto result = invariant::zariski_test({a.ctx, a.lks->set}, {b.ctx, b.lks->set}, maps, zopt);

  CompareReport rep;
  rep.a = a.report;
  rep.b = b.report;
  for (const auto& c : a.ctx.curve.components()) rep.a_components.push_back(c.id);
  rep.verdict = result.verdict == invariant::Verdict::Distinguished ? "DISTINGUISHED" : "NOT_DISTINGUISHED";
  rep.conjugate_compared =
      !options.oriented_only && a.ctx.single_component_support() && b.ctx.single_component_support();
  for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
    const auto& o = result.outcomes[i];
    MapSummary m;
    for (auto t : o.map) m.images.push_back(b.ctx.curve.components().at(t).id);
    m.oriented_match = o.oriented_match;
    m.conjugate_match = o.conjugate_match;
    rep.maps.push_back(std::move(m));
    if (!rep.witness && o.matched()) rep.witness = i;
  }

  if (rep.a.epsilon_applicable && rep.b.epsilon_applicable && rep.a.finite && rep.b.finite) {
    auto classes = [](const InvariantReport& r, bool with_conjugate) {
      std::set<std::array<int, 3>> out;
      for (const auto& m : r.members) {
        invariant::EpsilonSignature s{*m.epsilon};
        out.insert(s.canonical());
        if (with_conjugate) {
          invariant::EpsilonSignature c{{s.counts[0], s.counts[2], s.counts[1]}};
          out.insert(c.canonical());
        }
      }
      return out;
    };
    const auto in_a = classes(rep.a, false);
    const auto in_b = classes(rep.b, false);
    const auto reach_a = classes(rep.a, rep.conjugate_compared);
    const auto reach_b = classes(rep.b, rep.conjugate_compared);
    std::vector<std::array<int, 3>> only_a;
    std::vector<std::array<int, 3>> only_b;
    for (const auto& c : in_a)
      if (!reach_b.contains(c)) only_a.push_back(c);
    for (const auto& c : in_b)
      if (!reach_a.contains(c)) only_b.push_back(c);
    rep.epsilon_only_in_a = only_a;
    rep.epsilon_only_in_b = only_b;
  }
  return {std::move(a), std::move(b), std::move(result), std::move(rep)};
}

} // namespace curvelink::pipeline
