#pragma once

#include "curvelink/int_matrix.hpp"
#include "curvelink/smith.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvelink {

/// Integer coefficient vector over a group's generators.
///
/// Elements are stored in generator coordinates; equality in a group is
/// decided by FgAbelianGroup::equal / canonical_coordinates, never by
/// comparing raw coefficients.
struct GroupElement {
  std::vector<std::int64_t> coeffs;

  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  static GroupElement zero(std::size_t n) { return GroupElement(std::vector<std::int64_t>(n, 0)); }
  static GroupElement unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coeffs.size(); }
  bool is_zero_vector() const;

  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator*(std::int64_t k, const GroupElement& e);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^n / (row span of `relations`).
///
/// The Smith form of the relation matrix is computed eagerly in the
/// constructor; the object is immutable afterwards.
///
/// Canonical coordinates: for e in generator coordinates, y = e * V where
/// U * R * V = D. Coordinate i is reduced into [0, d_i) when d_i > 0 and left
/// untouched when it is a free coordinate (d_i == 0 or i beyond the diagonal).
/// Coordinates with d_i == 1 are therefore always 0.
class FgAbelianGroup {
public:
  /// Trivial group on zero generators.
  FgAbelianGroup() : FgAbelianGroup(0, IntMatrix(0, 0)) {}
  FgAbelianGroup(std::size_t generators, IntMatrix relations);

  std::size_t generator_count() const { return n_; }
  const IntMatrix& relations() const { return relations_; }
  const SmithForm& smith() const { return snf_; }

  /// Modulus of every canonical coordinate: d_i for torsion/trivial
  /// coordinates, 0 for free ones. Length generator_count().
  const std::vector<std::int64_t>& coordinate_moduli() const { return moduli_; }
  /// Diagonal of the relation matrix's Smith form (may contain 1s and 0s).
  std::vector<std::int64_t> invariant_factors() const { return snf_.invariant_factors(); }
  /// Invariant factors greater than 1.
  std::vector<std::int64_t> torsion() const;
  std::size_t free_rank() const;
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const;
  /// Group order; nullopt when infinite.
  std::optional<std::int64_t> order() const;
  /// Least common multiple of the torsion factors (1 if there is no torsion).
  std::int64_t torsion_exponent() const;

  std::vector<std::int64_t> canonical_coordinates(const GroupElement& e) const;
  /// Unique representative of the coset of e, in generator coordinates.
  GroupElement canonicalize(const GroupElement& e) const;
  /// Inverse of canonical_coordinates on reduced vectors.
  GroupElement from_canonical_coordinates(std::span<const std::int64_t> y) const;

  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& e) const;

  /// Order of e; 0 when e has infinite order.
  std::int64_t element_order(const GroupElement& e) const;

  /// Z^n / (relations + extra rows).
  FgAbelianGroup quotient_by(std::span<const GroupElement> extra) const;

  /// Every element of a finite group, canonical representatives in canonical
  /// coordinate order. Throws if infinite or larger than `limit`.
  std::vector<GroupElement> elements(std::size_t limit = 1'000'000) const;

  std::string describe() const;

private:
  void check_length(const GroupElement& e) const;

  std::size_t n_;
  IntMatrix relations_;
  SmithForm snf_;
  std::vector<std::int64_t> moduli_;
};

/// Group presented by n generators and a list of relation vectors.
FgAbelianGroup quotient(std::size_t n, const IntMatrix& relations);

/// Subgroup of an ambient group generated by a list of elements.
class Subgroup {
public:
  Subgroup(std::shared_ptr<const FgAbelianGroup> ambient, std::vector<GroupElement> generators);

  const FgAbelianGroup& ambient() const { return *ambient_; }
  const std::shared_ptr<const FgAbelianGroup>& ambient_ptr() const { return ambient_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// ambient / this subgroup.
  const FgAbelianGroup& cokernel() const { return cokernel_; }

  bool contains(const GroupElement& e) const;
  bool contains(const Subgroup& other) const;
  bool same_as(const Subgroup& other) const { return contains(other) && other.contains(*this); }

  /// Elements of a finite subgroup (ambient must be finite), canonical in the
  /// ambient and sorted by canonical coordinates.
  std::vector<GroupElement> elements(std::size_t limit = 1'000'000) const;

private:
  std::shared_ptr<const FgAbelianGroup> ambient_;
  std::vector<GroupElement> generators_;
  FgAbelianGroup cokernel_;
};

bool subgroup_membership(const Subgroup& s, const GroupElement& e);

/// Kernel of Z^k -> G, a_i |-> sum a_i images[i]: a basis of the kernel
/// lattice as rows of a k-column matrix (0 rows when injective).
IntMatrix free_map_kernel(const FgAbelianGroup& target, std::span<const GroupElement> images);

/// Group homomorphism given by the images of the source generators. The
/// constructor checks that every source relation maps to zero.
class Homomorphism {
public:
  Homomorphism(std::shared_ptr<const FgAbelianGroup> source, std::shared_ptr<const FgAbelianGroup> target,
               std::vector<GroupElement> images);

  const FgAbelianGroup& source() const { return *source_; }
  const FgAbelianGroup& target() const { return *target_; }
  const std::shared_ptr<const FgAbelianGroup>& target_ptr() const { return target_; }
  const std::vector<GroupElement>& images() const { return images_; }

  /// Linear extension applied to e, canonicalized in the target.
  GroupElement operator()(const GroupElement& e) const;
  /// Image without canonicalization (plain linear combination).
  GroupElement apply_raw(const GroupElement& e) const;

  Homomorphism compose_after(const Homomorphism& first) const;

private:
  std::shared_ptr<const FgAbelianGroup> source_;
  std::shared_ptr<const FgAbelianGroup> target_;
  std::vector<GroupElement> images_;
};

GroupElement apply_hom(const Homomorphism& phi, const GroupElement& e);

} // namespace curvelink
