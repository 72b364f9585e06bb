#pragma once

#include "curvelink/abelian.hpp"
#include "curvelink/curve.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace curvelink::invariant {

/// H1 of the complement of the off-support subcurve, the indeterminacy
/// subgroup inside it, and the quotient the linking set lives in.
///
/// Generators are the meridians of the complement components, in curve order;
/// the quotient shares those generators.
struct QuotientContext {
  curve::CurveCombinatorics curve;
  curve::CycleSpec cycle;
  curve::SupportSplit split;
  bool projection_contractible = false;

  std::shared_ptr<const FgAbelianGroup> h1_complement;
  std::vector<GroupElement> indeterminacy_generators;
  std::shared_ptr<const Subgroup> indeterminacy;
  std::shared_ptr<const FgAbelianGroup> quotient;

  /// complement component id -> unit vector
  std::map<std::string, GroupElement> meridians;
  /// complement component ids, one per generator
  std::vector<std::string> generator_ids;
  /// printed meridian names, one per generator
  std::vector<std::string> generator_labels;

  std::size_t generator_count() const { return generator_ids.size(); }
  bool single_component_support() const { return split.internal_support.size() == 1; }
};

/// Builds the complement homology (one relation sum d_k x_k = 0) and the
/// indeterminacy subgroup: for every internal-support component D and every
/// singular point P on D, the element sum_{C in complement, P in C} lk_P(C, D) x_C.
QuotientContext indeterminacy_subgroup(const curve::CurveCombinatorics& curve, const curve::CycleSpec& cycle);

/// Class of a realization in H1 of the complement, as a raw (unreduced)
/// coefficient vector. Braid labels must name complement components; support
/// components have to be labeled DROPPED.
GroupElement realization_class(const QuotientContext& ctx, const curve::Realization& r);

/// Exact description of a linking set: { offset + s : s in subgroup },
/// minus {0} when zero_excluded.
class LinkingSet {
public:
  LinkingSet(std::shared_ptr<const FgAbelianGroup> ambient, GroupElement offset,
             std::vector<GroupElement> subgroup_generators, bool zero_excluded);

  const FgAbelianGroup& ambient() const { return *ambient_; }
  const std::shared_ptr<const FgAbelianGroup>& ambient_ptr() const { return ambient_; }
  const GroupElement& offset() const { return offset_; }
  const Subgroup& subgroup() const { return subgroup_; }
  bool zero_excluded() const { return zero_excluded_; }

  bool contains(const GroupElement& e) const;
  bool is_finite() const { return ambient_->is_finite(); }
  /// Members, canonical in the ambient, ordered by canonical coordinates.
  std::vector<GroupElement> enumerate(std::size_t limit = 1'000'000) const;
  /// Set equality; ambients must present the same group.
  bool equals(const LinkingSet& other) const;

  /// Image under a homomorphism into another quotient (assumed injective, as
  /// the natural isomorphisms are).
  LinkingSet image(const Homomorphism& phi) const;

private:
  std::shared_ptr<const FgAbelianGroup> ambient_;
  GroupElement offset_;
  Subgroup subgroup_;
  bool zero_excluded_;
};

enum class LinkingCase { NonContractible, SingleComponent };

struct LinkingSetResult {
  LinkingSet set;
  LinkingCase kind;
  /// Kernel of the coefficient map Z^k -> quotient (rows); nonempty means a
  /// nonzero tuple of basis coefficients lands on [0].
  IntMatrix kernel;
};

/// Non-contractible projection: offset [gamma], all integer combinations of
/// the basis images. Single-component internal support: offset 0, same
/// subgroup, and [0] removed only when no nonzero coefficient tuple reaches it.
/// A contractible projection through several components throws DecomposeCycle.
LinkingSetResult linking_set(const QuotientContext& ctx, const std::optional<GroupElement>& gamma_hat,
                             const std::vector<GroupElement>& basis_images);

/// Linking set of the complex-conjugate cycle: every member negated.
LinkingSet conjugate_linking_set(const LinkingSet& s);

/// True when both groups have the same generator count and relation lattice.
bool same_presentation(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Counts of coordinates equal to 0, 1 and 2 (= -1) mod 3 of a representative
/// in (Z_3)^n / <sum x_k>. Two signatures are equal when their counts agree up
/// to cyclic rotation.
struct EpsilonSignature {
  std::array<int, 3> counts{};

  /// Lexicographically smallest cyclic rotation of counts.
  std::array<int, 3> canonical() const;
  friend bool operator==(const EpsilonSignature& a, const EpsilonSignature& b) {
    return a.canonical() == b.canonical();
  }
  friend bool operator<(const EpsilonSignature& a, const EpsilonSignature& b) { return a.canonical() < b.canonical(); }
  std::string to_string() const;
};

/// Whether the group's relation lattice is exactly <3 x_k, sum x_k>.
bool has_epsilon_shape(const FgAbelianGroup& g);

EpsilonSignature epsilon_signature(const FgAbelianGroup& quotient, const GroupElement& e);
EpsilonSignature epsilon_signature(const QuotientContext& ctx, const GroupElement& e);

/// The natural isomorphism of quotients induced by a component bijection:
/// meridian of C in a goes to the meridian of map(C) in b.
Homomorphism natural_isomorphism(const QuotientContext& a, const QuotientContext& b, const curve::ComponentMap& map);

struct ZariskiOptions {
  /// Skip the comparison against the conjugate set for single-component cycles.
  bool oriented_only = false;
  /// Let the cycle's internal support move instead of fixing it pointwise.
  bool full_search = false;
};

/// Component bijections a.curve -> b.curve preserving the combinatorics and
/// carrying a's projection walk onto b's (up to rotation). Throws
/// InvalidArgument with a structural diff when the combinatorics differ.
std::vector<curve::ComponentMap> candidate_isomorphisms(const QuotientContext& a, const QuotientContext& b,
                                                        const ZariskiOptions& options = {});

enum class Verdict { Distinguished, NotDistinguished };

struct MapOutcome {
  curve::ComponentMap map;
  bool oriented_match = false;
  bool conjugate_match = false;
  bool matched() const { return oriented_match || conjugate_match; }
};

struct ZariskiResult {
  Verdict verdict = Verdict::Distinguished;
  /// First matching bijection in lexicographic order.
  std::optional<curve::ComponentMap> witness;
  std::vector<MapOutcome> outcomes;
};

struct ZariskiSide {
  const QuotientContext& ctx;
  const LinkingSet& lks;
};

/// Compares phi(lks_a) with lks_b for every bijection, sequentially.
ZariskiResult zariski_test(const ZariskiSide& a, const ZariskiSide& b, const std::vector<curve::ComponentMap>& maps,
                           const ZariskiOptions& options = {});

std::string describe_combinatorics_diff(const curve::CurveCombinatorics& a, const curve::CurveCombinatorics& b);

} // namespace curvelink::invariant
