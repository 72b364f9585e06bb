#pragma once

#include "curvelink/invariant.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace curvelink::invariant {

/// Character of H1 of a line-arrangement complement with values in Z_m
/// (value v stands for exp(2 pi i v / m)). One value per line, curve order.
struct Character {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> values;

  bool is_trivial() const;
  /// Multiplicative order of the character.
  std::int64_t order() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Whether xi kills the relation sum x_L = 0 of the whole arrangement.
bool is_character(const curve::CurveCombinatorics& arrangement, const Character& xi);

/// The three vanishing conditions on (arrangement, xi, sigma):
///   (1) xi(x_L) = 1 for every line L on sigma;
///   (2) xi(x_L) = 1 for every line through a point of sigma;
///   (3) prod_{l through P} xi(x_l) = 1 for every singular point P on a line
///       of sigma.
/// Condition (3) is read with right-hand side 1.
/// Throws InvalidArgument unless every component is a line and xi is a
/// character of the arrangement.
bool is_inner_cyclic(const curve::CurveCombinatorics& arrangement, const Character& xi, const curve::Walk& sigma);

struct InnerCyclicCheck {
  bool quotient_nontrivial = false;
  /// First nontrivial inner-cyclic character found, lowest modulus first,
  /// values in lexicographic order.
  std::optional<Character> witness;
  std::vector<std::int64_t> moduli;
  std::size_t characters_checked = 0;
};

/// Moduli used for character enumeration: the torsion exponent of the
/// quotient, plus 2 when the quotient has a free part or is trivial.
std::vector<std::int64_t> character_moduli(const FgAbelianGroup& quotient);

/// Returns whether the quotient is nontrivial, and cross-checks that against
/// a brute-force search for a nontrivial inner-cyclic character. Disagreement
/// throws InvariantFailure.
InnerCyclicCheck inner_cyclic_equivalence_check(const curve::CurveCombinatorics& arrangement,
                                                const curve::CycleSpec& cycle);

/// xi_*([gamma]) in Z_m, for gamma given in the quotient's generators (the
/// complement lines). Throws InvalidArgument if xi does not factor through
/// the quotient.
std::int64_t i_invariant(const QuotientContext& ctx, const Character& xi, const GroupElement& gamma);

} // namespace curvelink::invariant
