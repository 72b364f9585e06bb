#include "curvelink/braid.hpp"
#include "curvelink/error.hpp"

#include <doctest.h>

using namespace curvelink;
using namespace curvelink::braid;

namespace {

const std::vector<int> kDrawnWord{-1, -2, 1, -2, -1, 2};
const std::vector<int> kPrintedWord{1, 2, -1, 2, 1, -2};

StrandLabeling tangent_labels() {
  return StrandLabeling({{1, std::string("T2")}, {2, CycleLabel{}}, {3, std::string("T1")}});
}

std::map<std::string, GroupElement> tangent_meridians() {
  return {{"T1", GroupElement::unit(2, 0)}, {"T2", GroupElement::unit(2, 1)}};
}

} // namespace

TEST_CASE("parsing and printing") {
  const auto b = BraidWord::parse(3, " 1 2  -1 ");
  CHECK(b.signed_indices() == std::vector<int>{1, 2, -1});
  CHECK(b == BraidWord::from_signed(3, {1, 2, -1}));
  CHECK(BraidWord::parse(3, "").letters().empty());
  CHECK_THROWS_AS(BraidWord::parse(3, "1 x"), InvalidArgument);
  CHECK_THROWS_AS(BraidWord::from_signed(3, {3}), InvalidArgument);
  CHECK_THROWS_AS(BraidWord::from_signed(3, {0}), InvalidArgument);
}

TEST_CASE("trivial braid closes into singletons") {
  const auto p = closure_components(BraidWord(3, {}));
  CHECK(p.components.size() == 3);
  CHECK(p.component_ids() == std::vector<int>{1, 2, 3});
  CHECK(linking_number(BraidWord(3, {}), p, 1, 2) == 0);
  CHECK(linking_number(BraidWord(3, {}), p, 2, 3) == 0);
}

TEST_CASE("three-strand braid keeps three components") {
  for (const auto& w : {kDrawnWord, kPrintedWord}) {
    const auto b = BraidWord::from_signed(3, w);
    const auto p = closure_components(b);
    CHECK(p.components.size() == 3);
    CHECK(p.end_position == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("linking of the drawn braid") {
  const auto b = BraidWord::from_signed(3, kDrawnWord);
  const auto p = closure_components(b);
  CHECK(linking_number(b, p, 2, 1) == -1);
  CHECK(linking_number(b, p, 2, 3) == 1);
  const auto dot = gamma_dot(b, p, tangent_labels());
  CHECK(dot == std::map<int, std::int64_t>{{1, -1}, {3, 1}});
}

TEST_CASE("hat gamma of the tangent cubic basis") {
  const auto target = quotient(2, IntMatrix{{1, 1}, {3, 0}, {0, 3}});
  const auto g1 = hat_gamma(BraidWord(3, {}), tangent_labels(), target, tangent_meridians());
  CHECK(target.is_zero(g1));
  const auto g2 = hat_gamma(BraidWord::from_signed(3, kDrawnWord), tangent_labels(), target, tangent_meridians());
  CHECK(target.equal(g2, GroupElement({1, -1})));
  const auto b = BraidWord::from_signed(3, kDrawnWord);
  const auto raw = rho_image(gamma_dot(b, closure_components(b), tangent_labels()), tangent_labels(), 2,
                             tangent_meridians());
  CHECK(raw == GroupElement({1, -1}));
}

TEST_CASE("printed word has the opposite sign") {
  const auto target = quotient(2, IntMatrix{{1, 1}, {3, 0}, {0, 3}});
  const auto g2 = hat_gamma(BraidWord::from_signed(3, kPrintedWord), tangent_labels(), target, tangent_meridians());
  CHECK(target.equal(g2, GroupElement({-1, 1})));
}

TEST_CASE("labelings") {
  const auto p = closure_components(BraidWord(3, {}));
  CHECK_NOTHROW(tangent_labels().validate_against(p));
  CHECK(tangent_labels().cycle_component() == 2);
  StrandLabeling missing({{1, std::string("T2")}, {2, CycleLabel{}}});
  CHECK_THROWS_AS(missing.validate_against(p), InvalidArgument);
  CHECK_THROWS_AS(StrandLabeling({{1, std::string("T2")}, {2, DroppedLabel{}}, {3, std::string("T1")}}),
                  InvalidArgument);
  CHECK_THROWS_AS(StrandLabeling({{1, CycleLabel{}}, {2, CycleLabel{}}, {3, std::string("T1")}}), InvalidArgument);
  const auto dropped = tangent_labels().with_dropped({"T1"});
  CHECK(std::holds_alternative<DroppedLabel>(dropped.assignment().at(3)));
  CHECK(label_to_string(dropped.assignment().at(2)) == "cycle");
}

TEST_CASE("dropped strands do not contribute") {
  const auto b = BraidWord::from_signed(3, kDrawnWord);
  const auto labels = tangent_labels().with_dropped({"T1"});
  const auto target = quotient(2, IntMatrix(0, 2));
  CHECK(target.equal(hat_gamma(b, labels, target, tangent_meridians()), GroupElement({0, -1})));
}

TEST_CASE("unknown curve component") {
  const auto target = quotient(2, IntMatrix(0, 2));
  const StrandLabeling labels({{1, std::string("T9")}, {2, CycleLabel{}}, {3, std::string("T1")}});
  CHECK_THROWS_AS(hat_gamma(BraidWord::from_signed(3, kDrawnWord), labels, target, tangent_meridians()),
                  InvalidArgument);
}

TEST_CASE("two strands linked twice") {
  const auto b = BraidWord::from_signed(2, {1, 1});
  const auto p = closure_components(b);
  CHECK(p.components.size() == 2);
  CHECK(linking_number(b, p, 1, 2) == 1);
  const auto c = BraidWord::from_signed(2, {1});
  CHECK(closure_components(c).components.size() == 1);
}
