#include "curvelink/inner_cyclic.hpp"

#include "curvelink/checked.hpp"
#include "curvelink/error.hpp"

#include <algorithm>
#include <set>

namespace curvelink::invariant {

bool Character::is_trivial() const {
  return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return checked::mod(v, modulus) == 0; });
}

std::int64_t Character::order() const {
  std::int64_t g = modulus;
  for (auto v : values) g = checked::gcd(g, checked::mod(v, modulus));
  return modulus / g;
}

namespace {

void require_arrangement(const curve::CurveCombinatorics& a) {
  for (const auto& c : a.components())
    if (c.degree != 1 || c.genus != 0)
      throw InvalidArgument("component '" + c.id + "' is not a line; inner-cyclic checks need a line arrangement");
}

std::int64_t sum_mod(const Character& xi, const std::vector<std::size_t>& idx) {
  std::int64_t s = 0;
  for (auto i : idx) s = checked::mod(checked::add(s, xi.values[i]), xi.modulus);
  return s;
}

std::vector<std::size_t> lines_through(const curve::CurveCombinatorics& a, const curve::SingularPoint& p) {
  std::vector<std::size_t> out;
  for (const auto& id : p.incident) out.push_back(*a.component_index(id));
  return out;
}

} // namespace

bool is_character(const curve::CurveCombinatorics& arrangement, const Character& xi) {
  if (xi.modulus < 1) throw InvalidArgument("character modulus must be positive");
  if (xi.values.size() != arrangement.components().size())
    throw InvalidArgument("character needs one value per line");
  std::int64_t s = 0;
  for (auto v : xi.values) s = checked::mod(checked::add(s, v), xi.modulus);
  return s == 0;
}

bool is_inner_cyclic(const curve::CurveCombinatorics& arrangement, const Character& xi, const curve::Walk& sigma) {
  require_arrangement(arrangement);
  if (!is_character(arrangement, xi)) throw InvalidArgument("values do not define a character: sum over lines is not 0");
  curve::validate_walk(sigma, curve::incidence_graph(arrangement));

  std::set<std::size_t> walk_lines;
  std::set<std::size_t> walk_points;
  for (const auto& v : sigma.vertices)
    (v.kind == curve::Vertex::Kind::Component ? walk_lines : walk_points).insert(v.index);

  auto vanishes = [&](std::size_t line) { return checked::mod(xi.values[line], xi.modulus) == 0; };
  for (auto l : walk_lines)
    if (!vanishes(l)) return false;
  for (auto p : walk_points)
    for (auto l : lines_through(arrangement, arrangement.points()[p]))
      if (!vanishes(l)) return false;
  for (const auto& p : arrangement.points()) {
    const auto lines = lines_through(arrangement, p);
    const bool on_walk_line = std::any_of(lines.begin(), lines.end(), [&](std::size_t l) { return walk_lines.contains(l); });
    if (on_walk_line && sum_mod(xi, lines) != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> character_moduli(const FgAbelianGroup& quotient) {
  std::vector<std::int64_t> out;
  const auto e = quotient.torsion_exponent();
  if (e > 1) out.push_back(e);
  if (!quotient.is_finite() || quotient.is_trivial()) out.push_back(2);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InnerCyclicCheck inner_cyclic_equivalence_check(const curve::CurveCombinatorics& arrangement,
                                                const curve::CycleSpec& cycle) {
  require_arrangement(arrangement);
  const QuotientContext ctx = indeterminacy_subgroup(arrangement, cycle);

  InnerCyclicCheck out;
  out.quotient_nontrivial = !ctx.quotient->is_trivial();
  out.moduli = character_moduli(*ctx.quotient);

  const std::size_t n = arrangement.components().size();
  constexpr std::size_t limit = 5'000'000;
  for (auto m : out.moduli) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= static_cast<std::size_t>(m);
      if (total > limit) throw InvalidArgument("too many characters to enumerate");
    }
    Character xi{m, std::vector<std::int64_t>(n, 0)};
    for (std::size_t count = 0; count < total; ++count) {
      if (count > 0) {
        // odometer, last line fastest
        for (std::size_t i = n; i-- > 0;) {
          if (++xi.values[i] < m) break;
          xi.values[i] = 0;
        }
      }
      ++out.characters_checked;
      if (xi.is_trivial() || !is_character(arrangement, xi)) continue;
      if (is_inner_cyclic(arrangement, xi, cycle.projection)) {
        out.witness = xi;
        break;
      }
    }
    if (out.witness) break;
  }

  if (out.quotient_nontrivial != out.witness.has_value())
    throw InvariantFailure(out.quotient_nontrivial
                               ? "quotient is nontrivial but no nontrivial inner-cyclic character was found"
                               : "quotient is trivial but a nontrivial inner-cyclic character exists");
  return out;
}

std::int64_t i_invariant(const QuotientContext& ctx, const Character& xi, const GroupElement& gamma) {
  if (gamma.size() != ctx.generator_count()) throw InvalidArgument("class has the wrong number of coordinates");
  if (xi.values.size() != ctx.curve.components().size()) throw InvalidArgument("character needs one value per line");
  std::vector<std::int64_t> on_generators;
  for (const auto& id : ctx.generator_ids) on_generators.push_back(xi.values[*ctx.curve.component_index(id)]);

  auto evaluate = [&](const GroupElement& e) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < e.size(); ++k)
      s = checked::mod(checked::fma(s, on_generators[k], e.coeffs[k]), xi.modulus);
    return s;
  };
  const auto& rel = ctx.quotient->relations();
  for (std::size_t i = 0; i < rel.rows(); ++i)
    if (evaluate(GroupElement(rel.row_vector(i))) != 0)
      throw InvalidArgument("character does not factor through the quotient");
  return evaluate(gamma);
}

} // namespace curvelink::invariant
