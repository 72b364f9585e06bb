#include "curvelink/abelian.hpp"

#include "curvelink/checked.hpp"
#include "curvelink/error.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

namespace curvelink {

// ---- GroupElement -----------------------------------------------------------

GroupElement GroupElement::unit(std::size_t n, std::size_t i) {
  GroupElement e = zero(n);
  e.coeffs.at(i) = 1;
  return e;
}

bool GroupElement::is_zero_vector() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t v) { return v == 0; });
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& v : r.coeffs) v = checked::neg(v);
  return r;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  if (o.size() != size()) throw InvalidArgument("group element length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] = checked::add(coeffs[i], o.coeffs[i]);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  if (o.size() != size()) throw InvalidArgument("group element length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] = checked::sub(coeffs[i], o.coeffs[i]);
  return *this;
}

GroupElement operator*(std::int64_t k, const GroupElement& e) {
  GroupElement r = e;
  for (auto& v : r.coeffs) v = checked::mul(k, v);
  return r;
}

// ---- FgAbelianGroup ---------------------------------------------------------

FgAbelianGroup::FgAbelianGroup(std::size_t generators, IntMatrix relations)
    : n_(generators), relations_(std::move(relations)) {
  if (relations_.cols() != n_) {
    if (relations_.rows() == 0)
      relations_ = IntMatrix(0, n_);
    else
      throw InvalidArgument("relation matrix must have one column per generator");
  }
  snf_ = smith_normal_form(relations_);
  moduli_.assign(n_, 0);
  const auto diag = snf_.invariant_factors();
  for (std::size_t i = 0; i < diag.size(); ++i) moduli_[i] = diag[i];
}

std::vector<std::int64_t> FgAbelianGroup::torsion() const {
  std::vector<std::int64_t> t;
  for (auto d : moduli_)
    if (d > 1) t.push_back(d);
  return t;
}

std::size_t FgAbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(moduli_.begin(), moduli_.end(), 0));
}

bool FgAbelianGroup::is_trivial() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](std::int64_t d) { return d == 1; });
}

std::optional<std::int64_t> FgAbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  std::int64_t o = 1;
  for (auto d : moduli_) o = checked::mul(o, d);
  return o;
}

std::int64_t FgAbelianGroup::torsion_exponent() const {
  std::int64_t e = 1;
  for (auto d : torsion()) e = checked::lcm(e, d);
  return e;
}

void FgAbelianGroup::check_length(const GroupElement& e) const {
  if (e.size() != n_) throw InvalidArgument("group element has wrong number of coefficients");
}

std::vector<std::int64_t> FgAbelianGroup::canonical_coordinates(const GroupElement& e) const {
  check_length(e);
  auto y = multiply(e.coeffs, snf_.right);
  for (std::size_t i = 0; i < n_; ++i)
    if (moduli_[i] > 0) y[i] = checked::mod(y[i], moduli_[i]);
  return y;
}

GroupElement FgAbelianGroup::from_canonical_coordinates(std::span<const std::int64_t> y) const {
  if (y.size() != n_) throw InvalidArgument("canonical coordinate vector has wrong length");
  return GroupElement(multiply(y, snf_.right_inverse));
}

GroupElement FgAbelianGroup::canonicalize(const GroupElement& e) const {
  return from_canonical_coordinates(canonical_coordinates(e));
}

bool FgAbelianGroup::equal(const GroupElement& a, const GroupElement& b) const {
  return canonical_coordinates(a) == canonical_coordinates(b);
}

bool FgAbelianGroup::is_zero(const GroupElement& e) const {
  const auto y = canonical_coordinates(e);
  return std::all_of(y.begin(), y.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t FgAbelianGroup::element_order(const GroupElement& e) const {
  const auto y = canonical_coordinates(e);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (y[i] == 0) continue;
    if (moduli_[i] == 0) return 0;
    ord = checked::lcm(ord, moduli_[i] / checked::gcd(y[i], moduli_[i]));
  }
  return ord;
}

FgAbelianGroup FgAbelianGroup::quotient_by(std::span<const GroupElement> extra) const {
  IntMatrix rel = relations_;
  for (const auto& g : extra) {
    check_length(g);
    rel.append_row(g.coeffs);
  }
  return FgAbelianGroup(n_, std::move(rel));
}

std::vector<GroupElement> FgAbelianGroup::elements(std::size_t limit) const {
  const auto ord = order();
  if (!ord) throw InvalidArgument("cannot enumerate an infinite group");
  if (static_cast<std::uint64_t>(*ord) > limit) throw InvalidArgument("group too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(*ord));
  std::vector<std::int64_t> y(n_, 0);
  for (;;) {
    out.push_back(from_canonical_coordinates(y));
    // Odometer, last coordinate fastest so output is lexicographic in y.
    std::size_t i = n_;
    while (i > 0) {
      --i;
      if (++y[i] < moduli_[i]) break;
      y[i] = 0;
      if (i == 0) return out;
    }
    if (n_ == 0) return out;
  }
}

std::string FgAbelianGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  const auto f = free_rank();
  if (f > 0) {
    os << 'Z';
    if (f > 1) os << '^' << f;
    first = false;
  }
  for (auto d : torsion()) {
    if (!first) os << " x ";
    os << "Z_" << d;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

FgAbelianGroup quotient(std::size_t n, const IntMatrix& relations) { return FgAbelianGroup(n, relations); }

// ---- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(std::shared_ptr<const FgAbelianGroup> ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)),
      cokernel_(ambient_->quotient_by(generators_)) {}

bool Subgroup::contains(const GroupElement& e) const { return cokernel_.is_zero(e); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const GroupElement& g) { return contains(g); });
}

std::vector<GroupElement> Subgroup::elements(std::size_t limit) const {
  if (!ambient_->is_finite()) throw InvalidArgument("cannot enumerate a subgroup of an infinite group");
  const FgAbelianGroup& g = *ambient_;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<GroupElement> frontier;
  const GroupElement zero = GroupElement::zero(g.generator_count());
  seen.insert(g.canonical_coordinates(zero));
  frontier.push_back(zero);
  while (!frontier.empty()) {
    GroupElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators_) {
      GroupElement next = g.canonicalize(cur + gen);
      if (seen.insert(g.canonical_coordinates(next)).second) {
        if (seen.size() > limit) throw InvalidArgument("subgroup too large to enumerate");
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (const auto& y : seen) out.push_back(g.from_canonical_coordinates(y));
  return out;
}

bool subgroup_membership(const Subgroup& s, const GroupElement& e) { return s.contains(e); }

namespace {

/// Hermite-style basis of the row lattice: nonzero rows in echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
IntMatrix row_echelon_basis(IntMatrix m) {
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> piv;
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 && (!piv || checked::abs(m(i, c)) < checked::abs(m(*piv, c)))) piv = i;
      if (!piv) break;
      m.swap_rows(r, *piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        m.add_row_multiple(i, r, checked::neg(m(i, c) / m(r, c)));
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto q = checked::mod(m(i, c), m(r, c));
      m.add_row_multiple(i, r, checked::neg((m(i, c) - q) / m(r, c)));
    }
    ++r;
  }
  IntMatrix out(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return out;
}

} // namespace

IntMatrix free_map_kernel(const FgAbelianGroup& target, std::span<const GroupElement> images) {
  const std::size_t k = images.size();
  const std::size_t n = target.generator_count();
  IntMatrix stacked(0, n);
  for (const auto& im : images) {
    if (im.size() != n) throw InvalidArgument("image has wrong number of coefficients");
    stacked.append_row(im.coeffs);
  }
  for (std::size_t r = 0; r < target.relations().rows(); ++r) stacked.append_row(target.relations().row(r));

  // Rows of U past the rank span the left kernel of the stacked matrix; the
  // first k coordinates of those rows span the kernel of the free map.
  const SmithForm snf = smith_normal_form(stacked);
  IntMatrix spanning(0, k);
  std::vector<std::int64_t> proj(k);
  for (std::size_t r = snf.rank(); r < snf.left.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) proj[c] = snf.left(r, c);
    if (std::any_of(proj.begin(), proj.end(), [](std::int64_t v) { return v != 0; })) spanning.append_row(proj);
  }
  if (spanning.rows() == 0) return spanning;

  return row_echelon_basis(spanning);
}

// ---- Homomorphism -----------------------------------------------------------

Homomorphism::Homomorphism(std::shared_ptr<const FgAbelianGroup> source,
                           std::shared_ptr<const FgAbelianGroup> target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->generator_count())
    throw InvalidArgument("homomorphism needs one image per source generator");
  for (const auto& im : images_)
    if (im.size() != target_->generator_count()) throw InvalidArgument("image has wrong number of coefficients");
  const IntMatrix& rel = source_->relations();
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    GroupElement img = apply_raw(GroupElement(rel.row_vector(r)));
    if (!target_->is_zero(img)) {
      std::ostringstream os;
      os << "not a homomorphism: source relation " << r << " does not map to zero";
      throw NotAHomomorphism(os.str());
    }
  }
}

GroupElement Homomorphism::apply_raw(const GroupElement& e) const {
  if (e.size() != source_->generator_count()) throw InvalidArgument("element has wrong number of coefficients");
  GroupElement out = GroupElement::zero(target_->generator_count());
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e.coeffs[j] != 0) out += e.coeffs[j] * images_[j];
  return out;
}

GroupElement Homomorphism::operator()(const GroupElement& e) const { return target_->canonicalize(apply_raw(e)); }

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
  std::vector<GroupElement> imgs;
  imgs.reserve(first.images_.size());
  for (const auto& g : first.images_) imgs.push_back(apply_raw(g));
  return Homomorphism(first.source_, target_, std::move(imgs));
}

GroupElement apply_hom(const Homomorphism& phi, const GroupElement& e) { return phi(e); }

} // namespace curvelink
