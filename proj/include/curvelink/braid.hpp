#pragma once

#include "curvelink/abelian.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace curvelink::braid {

/// sigma_index^sign, index in [1, strand_count - 1].
struct Letter {
  int index;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the Artin generators of B_d, read left to right.
///
/// Sign convention: a letter's crossing contributes its exponent (+1 for
/// sigma_i, -1 for sigma_i^-1) to the doubled linking number of the two
/// strands it crosses.
class BraidWord {
public:
  BraidWord(int strand_count, std::vector<Letter> letters);
  /// Signed generator indices, e.g. {1, 2, -1} for sigma_1 sigma_2 sigma_1^-1.
  static BraidWord from_signed(int strand_count, const std::vector<int>& signed_indices);
  /// Whitespace-separated signed integers, e.g. "-1 2 4 3".
  static BraidWord parse(int strand_count, std::string_view text);

  int strand_count() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<int> signed_indices() const;
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Closure components of a braid. Positions are 1-based; a component is named
/// by its smallest start position (so component ids match strand labels s_k).
struct ClosurePartition {
  /// end_position[p - 1] = where the strand starting at position p ends.
  std::vector<int> end_position;
  /// Each component's start positions, ascending; components ordered by id.
  std::vector<std::vector<int>> components;
  /// component_of[p - 1] = id of the component containing start position p.
  std::vector<int> component_of;

  std::vector<int> component_ids() const;
  bool has_component(int id) const;
};

ClosurePartition closure_components(const BraidWord& b);

/// Linking number of two distinct closure components.
///
/// Throws InvariantFailure if the doubled count is odd (cannot happen for a
/// valid partition of the same word).
std::int64_t linking_number(const BraidWord& b, const ClosurePartition& p, int a, int c);

struct CycleLabel {
  friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
};
struct DroppedLabel {
  friend bool operator==(const DroppedLabel&, const DroppedLabel&) = default;
};
/// Label of one closure component: the cycle itself, a dropped component, or
/// the identifier of the curve component it lies on.
using Label = std::variant<CycleLabel, DroppedLabel, std::string>;

std::string label_to_string(const Label& l);

/// Assignment of a label to every closure component (keyed by component id).
class StrandLabeling {
public:
  StrandLabeling() = default;
  explicit StrandLabeling(std::map<int, Label> assignment);

  const std::map<int, Label>& assignment() const { return assignment_; }
  int cycle_component() const;

  /// Throws InvalidArgument unless the keys are exactly p's component ids and
  /// one component is labeled CYCLE.
  void validate_against(const ClosurePartition& p) const;

  /// Copy with every curve-component label in `ids` replaced by DROPPED.
  StrandLabeling with_dropped(const std::vector<std::string>& ids) const;

private:
  std::map<int, Label> assignment_;
};

/// Linking number of the cycle with every component that is neither the cycle
/// nor dropped.
std::map<int, std::int64_t> gamma_dot(const BraidWord& b, const ClosurePartition& p, const StrandLabeling& labeling);

/// rho applied to gamma_dot: sum of lk(cycle, c) * meridians[label(c)] as a
/// plain coefficient vector of length n (no reduction).
GroupElement rho_image(const std::map<int, std::int64_t>& dot, const StrandLabeling& labeling, std::size_t n,
                       const std::map<std::string, GroupElement>& meridians);

/// Class of the cycle in the target group: sum over non-dropped components c
/// of lk(cycle, c) * meridians[label(c)], canonicalized.
GroupElement hat_gamma(const BraidWord& b, const StrandLabeling& labeling, const FgAbelianGroup& target,
                       const std::map<std::string, GroupElement>& meridians);

} // namespace curvelink::braid
