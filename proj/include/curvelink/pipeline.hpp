#pragma once

#include "curvelink/fixture.hpp"
#include "curvelink/inner_cyclic.hpp"
#include "curvelink/invariant.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvelink::pipeline {

struct BasisImage {
  std::string component;
  std::string name;
  /// Coefficients of rho(gamma-dot) in the complement meridians, unreduced.
  std::vector<std::int64_t> raw;
  /// Canonical representative in the quotient.
  std::vector<std::int64_t> canonical;
  /// Short representative in the quotient.
  std::vector<std::int64_t> reduced;
  friend bool operator==(const BasisImage&, const BasisImage&) = default;
};

struct Member {
  /// Short representative (coefficients in the complement meridians).
  std::vector<std::int64_t> representative;
  /// Raw epsilon counts of the representative, when applicable.
  std::optional<std::array<int, 3>> epsilon;
  friend bool operator==(const Member&, const Member&) = default;
};

struct InnerCyclicSummary {
  bool quotient_nontrivial = false;
  std::vector<std::int64_t> moduli;
  std::optional<std::int64_t> witness_modulus;
  std::vector<std::int64_t> witness_values;
  std::optional<std::int64_t> i_invariant;
  friend bool operator==(const InnerCyclicSummary&, const InnerCyclicSummary&) = default;
};

struct InvariantReport {
  std::string cycle;
  std::vector<std::string> deleted;
  std::vector<std::string> internal_support;
  std::vector<std::string> support;
  std::vector<std::string> complement;
  std::vector<std::string> generator_labels;
  bool projection_contractible = false;

  std::string h1;
  std::vector<std::int64_t> h1_invariant_factors;
  std::vector<std::int64_t> quotient_invariant_factors;
  std::string quotient;
  std::vector<std::vector<std::int64_t>> indeterminacy;

  std::optional<std::vector<std::int64_t>> gamma_hat;
  std::vector<BasisImage> basis;

  std::string linking_case;
  bool zero_excluded = false;
  /// Nonzero coefficient tuples (kernel basis) that land on [0].
  std::vector<std::vector<std::int64_t>> kernel;
  bool finite = false;
  std::vector<Member> members;
  bool epsilon_applicable = false;

  std::optional<InnerCyclicSummary> inner_cyclic;
  std::vector<std::string> notes;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct MapSummary {
  /// image component id for every source component, in source order
  std::vector<std::string> images;
  bool oriented_match = false;
  bool conjugate_match = false;
  friend bool operator==(const MapSummary&, const MapSummary&) = default;
};

struct CompareReport {
  InvariantReport a;
  InvariantReport b;
  std::vector<std::string> a_components;
  std::string verdict;
  bool conjugate_compared = false;
  std::vector<MapSummary> maps;
  std::optional<std::size_t> witness;
  /// epsilon classes (canonical) present in lks_a and absent from lks_b and
  /// its conjugate; nonempty means no bijection can match
  std::optional<std::vector<std::array<int, 3>>> epsilon_only_in_a;
  std::optional<std::vector<std::array<int, 3>>> epsilon_only_in_b;

  std::size_t failures() const;
  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

struct Options {
  bool check_bezout = true;
  bool oriented_only = false;
  bool full_search = false;
};

/// Everything computed for one (curve, cycle, deletions) triple.
struct Computation {
  invariant::QuotientContext ctx;
  std::optional<invariant::LinkingSetResult> lks;
  InvariantReport report;
};

/// Curve and cycle with components removed: deleted components disappear
/// from the curve and their braid labels become DROPPED.
fixture::FixtureDocument apply_deletions(const fixture::FixtureDocument& doc, const std::vector<std::string>& deletions);

Computation run_pipeline(const fixture::FixtureDocument& doc, const std::string& cycle,
                         const std::vector<std::string>& deletions = {}, const Options& options = {});

struct Comparison {
  Computation a;
  Computation b;
  invariant::ZariskiResult result;
  CompareReport report;
};

Comparison compare(const fixture::FixtureDocument& doc_a, const std::vector<std::string>& deletions_a,
                   const fixture::FixtureDocument& doc_b, const std::vector<std::string>& deletions_b,
                   const std::string& cycle_a, const std::string& cycle_b, const Options& options = {});

/// A short representative of e: the canonical one, or for (Z_3)^n / <sum>
/// a vector with entries in {-1, 0, 1} and as few nonzero entries as possible.
GroupElement short_representative(const FgAbelianGroup& q, const GroupElement& e);

/// "x1 - x2 + 2 x5", or "0".
std::string format_element(std::span<const std::int64_t> coeffs, const std::vector<std::string>& labels);

} // namespace curvelink::pipeline
