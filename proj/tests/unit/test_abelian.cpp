#include "curvelink/abelian.hpp"
#include "curvelink/error.hpp"

#include <doctest.h>

#include <memory>

using namespace curvelink;

namespace {

GroupElement el(std::vector<std::int64_t> c) { return GroupElement(std::move(c)); }

std::shared_ptr<const FgAbelianGroup> tangent_quotient() {
  return std::make_shared<const FgAbelianGroup>(quotient(2, IntMatrix{{1, 1}, {3, 0}, {0, 3}}));
}

std::shared_ptr<const FgAbelianGroup> z3_five() {
  IntMatrix r(0, 5);
  r.append_row(std::vector<std::int64_t>{1, 1, 1, 1, 1});
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::int64_t> row(5, 0);
    row[k] = 3;
    r.append_row(row);
  }
  return std::make_shared<const FgAbelianGroup>(quotient(5, r));
}

} // namespace

TEST_CASE("two lines give Z") {
  const auto g = quotient(2, IntMatrix{{1, 1}});
  CHECK(g.free_rank() == 1);
  CHECK(g.torsion().empty());
  CHECK_FALSE(g.is_finite());
  CHECK(g.describe() == "Z");
}

TEST_CASE("five lines give Z^4") {
  const auto g = quotient(5, IntMatrix{{1, 1, 1, 1, 1}});
  CHECK(g.free_rank() == 4);
  CHECK(g.torsion().empty());
}

TEST_CASE("empty presentation is trivial") {
  const auto g = quotient(0, IntMatrix(0, 0));
  CHECK(g.is_trivial());
  CHECK(g.order() == 1);
  CHECK(FgAbelianGroup().is_trivial());
}

TEST_CASE("torsion from relations") {
  const auto q = tangent_quotient();
  CHECK(q->torsion() == std::vector<std::int64_t>{3});
  CHECK(q->order() == 3);
  CHECK(q->torsion_exponent() == 3);
  CHECK(q->elements().size() == 3);
}

TEST_CASE("canonicalize") {
  const auto q = tangent_quotient();
  CHECK(q->canonicalize(el({0, 0})) == el({0, 0}));
  CHECK(q->is_zero(el({1, 1})));
  // x2 = -x1, so 2 x1 = -x1 = x2 (and not -x2, which is x1)
  CHECK(q->canonicalize(el({2, 0})) == q->canonicalize(el({0, 1})));
  CHECK(q->canonicalize(el({2, 0})) != q->canonicalize(el({0, -1})));
  CHECK(q->equal(el({1, -1}), el({-2, 2})));
  CHECK_FALSE(q->equal(el({1, -1}), el({-1, 1})));
  CHECK(q->element_order(el({1, 0})) == 3);
  CHECK_THROWS_AS(q->canonicalize(el({1})), InvalidArgument);
}

TEST_CASE("canonical coordinates round trip") {
  const auto g = quotient(3, IntMatrix{{2, 4, 0}, {0, 6, 0}});
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = -2; c <= 2; ++c) {
        const auto e = el({a, b, c});
        const auto y = g.canonical_coordinates(e);
        CHECK(g.equal(g.from_canonical_coordinates(y), e));
      }
  CHECK(g.free_rank() == 1);
  CHECK(g.torsion() == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("subgroup membership") {
  const auto q = z3_five();
  const Subgroup s(q, {el({1, -1, 0, 0, 0}), el({0, 0, -1, 1, 0})});
  CHECK(subgroup_membership(s, el({0, 0, 0, 0, 0})));
  CHECK(subgroup_membership(s, el({1, -1, 0, 0, 0})));
  CHECK(subgroup_membership(s, el({1, -1, 1, -1, 0})));
  CHECK_FALSE(subgroup_membership(s, el({1, 0, 0, 0, 0})));
  CHECK(s.elements().size() == 9);
  const Subgroup t(q, {el({1, -1, 1, -1, 0})});
  CHECK(s.contains(t));
  CHECK_FALSE(t.contains(s));
  CHECK(Subgroup(q, {el({2, 1, 0, 0, 0})}).same_as(Subgroup(q, {el({1, 2, 0, 0, 0})})));
}

TEST_CASE("homomorphisms") {
  const auto q = z3_five();
  std::vector<GroupElement> id;
  std::vector<GroupElement> neg;
  std::vector<GroupElement> perm;
  // sigma = (0 1 2 3 4) -> (1 2 3 4 0)
  for (std::size_t k = 0; k < 5; ++k) {
    id.push_back(GroupElement::unit(5, k));
    neg.push_back(-GroupElement::unit(5, k));
    perm.push_back(GroupElement::unit(5, (k + 1) % 5));
  }
  const Homomorphism phi_id(q, q, id);
  const Homomorphism phi_neg(q, q, neg);
  const Homomorphism phi_perm(q, q, perm);
  const auto e = el({1, -1, 0, 2, 0});
  CHECK(apply_hom(phi_id, e) == q->canonicalize(e));
  CHECK(phi_neg(e) == q->canonicalize(-e));
  CHECK(q->equal(phi_perm(e), el({0, 1, -1, 0, 2})));
  CHECK(q->is_zero(phi_neg.compose_after(phi_neg)(e) - e));
  CHECK(phi_perm.apply_raw(e) == el({0, 1, -1, 0, 2}));
}

TEST_CASE("relation violation is not a homomorphism") {
  const auto src = tangent_quotient();
  const auto dst = std::make_shared<const FgAbelianGroup>(quotient(2, IntMatrix{{1, 1}}));
  CHECK_THROWS_AS(Homomorphism(src, dst, {el({1, 0}), el({0, 1})}), NotAHomomorphism);
  CHECK_THROWS_AS(Homomorphism(src, src, {el({1, 0})}), InvalidArgument);
}

TEST_CASE("kernel of a free map is an echelon basis") {
  const auto q = tangent_quotient();
  const std::vector<GroupElement> images{el({1, -1}), el({-1, 1})};
  const auto k = free_map_kernel(*q, images);
  REQUIRE(k.rows() == 2);
  CHECK(k == IntMatrix{{1, 1}, {0, 3}});
  const std::vector<GroupElement> free_images{el({1, 0})};
  const auto z = std::make_shared<const FgAbelianGroup>(quotient(2, IntMatrix{{1, 1}}));
  CHECK(free_map_kernel(*z, free_images).rows() == 0);
}
