#include "curvelink/error.hpp"
#include "curvelink/invariant.hpp"
#include "curvelink/pipeline.hpp"
#include "test_data.hpp"

#include <doctest.h>

#include <memory>

using namespace curvelink;
using namespace curvelink::invariant;

namespace {

GroupElement el(std::vector<std::int64_t> c) { return GroupElement(std::move(c)); }

std::vector<GroupElement> basis_images(const QuotientContext& ctx) {
  std::vector<GroupElement> out;
  for (const auto& [comp, names] : ctx.cycle.genus_basis)
    for (const auto& n : names) out.push_back(realization_class(ctx, ctx.cycle.realizations.at(n)));
  return out;
}

QuotientContext restricted(const std::vector<std::string>& deleted) {
  const auto doc = pipeline::apply_deletions(testdata::c7(), deleted);
  return indeterminacy_subgroup(doc.curve, doc.cycle("gamma"));
}

std::shared_ptr<const FgAbelianGroup> epsilon_group(std::size_t n) {
  IntMatrix r(0, n);
  r.append_row(std::vector<std::int64_t>(n, 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> row(n, 0);
    row[k] = 3;
    r.append_row(row);
  }
  return std::make_shared<const FgAbelianGroup>(quotient(n, r));
}

} // namespace

TEST_CASE("indeterminacy of the tangent cubic") {
  const auto& doc = testdata::tangent_cubic();
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("gamma"));
  CHECK(ctx.generator_ids == std::vector<std::string>{"T1", "T2"});
  CHECK(ctx.indeterminacy_generators == std::vector<GroupElement>{el({3, 0}), el({0, 3})});
  CHECK(ctx.h1_complement->describe() == "Z");
  CHECK(ctx.quotient->invariant_factors() == std::vector<std::int64_t>{1, 3});
  CHECK(ctx.quotient->order() == 3);
  CHECK(ctx.projection_contractible);
  CHECK(ctx.single_component_support());
}

TEST_CASE("tangent cubic linking set") {
  const auto& doc = testdata::tangent_cubic();
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("gamma"));
  const auto imgs = basis_images(ctx);
  CHECK(imgs[0] == el({0, 0}));
  CHECK(imgs[1] == el({1, -1}));
  const auto r = linking_set(ctx, std::nullopt, imgs);
  CHECK(r.kind == LinkingCase::SingleComponent);
  CHECK_FALSE(r.set.zero_excluded());
  const auto members = r.set.enumerate();
  CHECK(members.size() == 3);
  CHECK(r.set.contains(el({0, 0})));
  CHECK(r.set.contains(el({1, -1})));
  CHECK(r.set.contains(el({-1, 1})));
}

TEST_CASE("zero is excluded when the coefficient map is injective") {
  // one generator of infinite order: kernel empty
  const auto g = std::make_shared<const FgAbelianGroup>(quotient(2, IntMatrix(0, 2)));
  const LinkingSet s(g, el({0, 0}), {el({1, 0})}, true);
  CHECK_FALSE(s.contains(el({0, 0})));
  CHECK(s.contains(el({-4, 0})));
  CHECK_FALSE(s.contains(el({0, 1})));
}

TEST_CASE("C7 basis images and restrictions") {
  const auto full = restricted({});
  auto imgs = basis_images(full);
  CHECK(imgs[0] == el({0, 1, -1, 0, 0, -1, 1}));
  CHECK(imgs[1] == el({0, 0, 0, -1, 1, 1, 1}));

  const auto c56 = restricted({"L5", "L6"});
  imgs = basis_images(c56);
  CHECK(c56.generator_labels == std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"});
  CHECK(imgs[0] == el({0, 1, -1, 0, 0}));
  CHECK(imgs[1] == el({0, 0, 0, -1, 1}));

  const auto c13 = restricted({"L1", "L3"});
  imgs = basis_images(c13);
  CHECK(c13.generator_labels == std::vector<std::string>{"x0", "x2", "x4", "x5", "x6"});
  CHECK(imgs[0] == el({0, -1, 0, -1, 1}));
  CHECK(imgs[1] == el({0, 0, 1, 1, 1}));
}

TEST_CASE("restricted quotient has epsilon shape") {
  const auto c56 = restricted({"L5", "L6"});
  CHECK(has_epsilon_shape(*c56.quotient));
  CHECK(c56.quotient->order() == 81);
  CHECK_FALSE(has_epsilon_shape(quotient(2, IntMatrix{{3, 0}, {0, 3}})));
}

TEST_CASE("epsilon signatures") {
  const auto c56 = restricted({"L5", "L6"});
  const auto s = epsilon_signature(c56, el({0, 1, -1, 0, 0}));
  CHECK(s.counts == std::array<int, 3>{3, 1, 1});
  CHECK(s.canonical() == std::array<int, 3>{1, 1, 3});
  CHECK(s == EpsilonSignature{{1, 3, 1}});
  CHECK_FALSE(s == EpsilonSignature{{3, 0, 2}});
  // adding the relation sum x_k rotates the counts
  CHECK(epsilon_signature(c56, el({1, 2, 0, 1, 1})) == s);
  CHECK(epsilon_signature(*epsilon_group(5), el({0, 0, 0, 0, 0})).counts == std::array<int, 3>{5, 0, 0});
}

TEST_CASE("linking set equality and conjugation") {
  const auto q = epsilon_group(5);
  const LinkingSet a(q, el({0, 0, 0, 0, 0}), {el({1, -1, 0, 0, 0})}, false);
  const LinkingSet b(q, el({0, 0, 0, 0, 0}), {el({-1, 1, 0, 0, 0})}, false);
  CHECK(a.equals(b));
  const LinkingSet c(q, el({1, -1, 0, 0, 0}), {el({0, 0, 1, -1, 0})}, false);
  CHECK_FALSE(a.equals(c));
  const auto cc = conjugate_linking_set(conjugate_linking_set(c));
  CHECK(cc.equals(c));
  CHECK(conjugate_linking_set(c).contains(el({-1, 1, 0, 0, 0})));
  CHECK_FALSE(conjugate_linking_set(c).contains(el({1, -1, 0, 0, 0})));
}

TEST_CASE("infinite linking sets compare by coset") {
  const auto z2 = std::make_shared<const FgAbelianGroup>(quotient(3, IntMatrix{{1, 1, 1}}));
  const LinkingSet a(z2, el({1, 0, 0}), {el({0, 2, 0})}, false);
  const LinkingSet b(z2, el({1, 4, 0}), {el({0, -2, 0})}, true);
  CHECK(a.equals(b));
  const LinkingSet c(z2, el({1, 1, 0}), {el({0, 2, 0})}, false);
  CHECK_FALSE(a.equals(c));
  CHECK_THROWS_AS(a.enumerate(), InvalidArgument);
}

TEST_CASE("same presentation") {
  CHECK(same_presentation(quotient(2, IntMatrix{{3, 0}, {0, 3}}), quotient(2, IntMatrix{{3, 3}, {0, 3}})));
  CHECK_FALSE(same_presentation(quotient(2, IntMatrix{{3, 0}}), quotient(2, IntMatrix{{0, 3}})));
  CHECK_FALSE(same_presentation(quotient(2, IntMatrix(0, 2)), quotient(3, IntMatrix(0, 3))));
}

TEST_CASE("natural isomorphism and zariski test") {
  const auto a = restricted({"L5", "L6"});
  const auto b = restricted({"L1", "L3"});
  const auto maps = candidate_isomorphisms(a, b);
  CHECK(maps.size() == 120);
  const auto la = linking_set(a, std::nullopt, basis_images(a));
  const auto lb = linking_set(b, std::nullopt, basis_images(b));
  const auto r = zariski_test({a, la.set}, {b, lb.set}, maps);
  CHECK(r.verdict == Verdict::Distinguished);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.outcomes.size() == 120);

  const auto self = zariski_test({a, la.set}, {a, la.set}, candidate_isomorphisms(a, a));
  CHECK(self.verdict == Verdict::NotDistinguished);
  REQUIRE(self.witness.has_value());
  CHECK(*self.witness == curve::ComponentMap{0, 1, 2, 3, 4, 5});

  const auto phi = natural_isomorphism(a, b, maps.front());
  CHECK(phi.images().size() == 5);
}

TEST_CASE("different combinatorics are reported") {
  const auto a = restricted({"L5", "L6"});
  const auto t = indeterminacy_subgroup(testdata::tangent_cubic().curve, testdata::tangent_cubic().cycle("gamma"));
  CHECK_THROWS_AS(candidate_isomorphisms(a, t), InvalidArgument);
  CHECK_FALSE(describe_combinatorics_diff(a.curve, t.curve).empty());
}

TEST_CASE("support labels must be dropped") {
  const auto& doc = testdata::tangent_cubic();
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("gamma"));
  const curve::BraidRealization bad{braid::BraidWord(3, {}),
                                    braid::StrandLabeling({{1, std::string("C")},
                                                           {2, braid::CycleLabel{}},
                                                           {3, std::string("T1")}})};
  CHECK_THROWS_AS(realization_class(ctx, bad), InvalidArgument);
}

TEST_CASE("contractible projection through two components must be decomposed") {
  const auto doc = fixture::parse_fixture(R"([components]
A degree=1 genus=0
B degree=1 genus=0
[points]
P on=A,B
[cycles]
loop walk=A,P,B,P support=A,B
)");
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("loop"));
  CHECK(ctx.projection_contractible);
  CHECK_THROWS_AS(linking_set(ctx, std::nullopt, {}), DecomposeCycle);
}

TEST_CASE("non-contractible projection: coset of the basis span") {
  // Two lines and a conic through two common points: a loop through both
  // points is non-contractible.
  const auto doc = fixture::parse_fixture(R"([components]
Q degree=2 genus=0 meridian=q
L degree=1 genus=0 meridian=l
M degree=1 genus=0 meridian=m
N degree=1 genus=0 meridian=n
[points]
P1 on=Q,L
P2 on=Q,L
R1 on=Q,M lk=2
R2 on=Q,N lk=2
S on=L,M,N
[cycles]
loop walk=Q,P1,L,P2 support=Q,L class=c
[braids]
c class=M:1,N:-1
)");
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("loop"));
  CHECK_FALSE(ctx.projection_contractible);
  CHECK(ctx.generator_ids == std::vector<std::string>{"M", "N"});
  const auto gamma = realization_class(ctx, ctx.cycle.realizations.at("c"));
  const auto r = linking_set(ctx, gamma, {});
  CHECK(r.kind == LinkingCase::NonContractible);
  CHECK(r.set.contains(gamma));
  CHECK_FALSE(r.set.zero_excluded());
  CHECK_THROWS_AS(linking_set(ctx, std::nullopt, {}), InvalidArgument);
}

TEST_CASE("rational single component has no minimal cycles") {
  const auto doc = fixture::parse_fixture(R"([components]
A degree=1 genus=0
B degree=1 genus=0
[points]
P on=A,B
[cycles]
point walk=A support=A
)");
  const auto ctx = indeterminacy_subgroup(doc.curve, doc.cycle("point"));
  CHECK_THROWS_AS(linking_set(ctx, std::nullopt, {}), InvalidArgument);
}
