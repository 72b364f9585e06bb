#include "curvelink/error.hpp"
#include "curvelink/smith.hpp"

#include <doctest.h>

#include <limits>

using namespace curvelink;

namespace {

void check_form(const IntMatrix& a, const SmithForm& f) {
  CHECK(f.left * a * f.right == f.diagonal);
  CHECK(f.diagonal.is_diagonal());
  CHECK(f.right * f.right_inverse == IntMatrix::identity(a.cols()));
  const auto d = f.invariant_factors();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0) CHECK(d[i + 1] == 0);
    else CHECK(d[i + 1] % d[i] == 0);
  }
}

} // namespace

TEST_CASE("identity is its own normal form") {
  const auto id = IntMatrix::identity(2);
  const auto f = smith_normal_form(id);
  CHECK(f.left == id);
  CHECK(f.diagonal == id);
  CHECK(f.right == id);
  check_form(id, f);
}

TEST_CASE("tangent cubic relations give factors 1 and 3") {
  const IntMatrix r{{3, 0}, {0, 3}, {1, 1}};
  const auto f = smith_normal_form(r);
  CHECK(f.invariant_factors() == std::vector<std::int64_t>{1, 3});
  CHECK(f.rank() == 2);
  check_form(r, f);
}

TEST_CASE("zero and empty matrices") {
  const IntMatrix z(2, 3);
  auto f = smith_normal_form(z);
  CHECK(f.invariant_factors() == std::vector<std::int64_t>{0, 0});
  check_form(z, f);
  const IntMatrix e(0, 2);
  f = smith_normal_form(e);
  CHECK(f.invariant_factors().empty());
  CHECK(f.right == IntMatrix::identity(2));
}

TEST_CASE("signs end up positive and rank deficiency sorts last") {
  const IntMatrix m{{-2, 4}, {1, -2}};
  const auto f = smith_normal_form(m);
  CHECK(f.invariant_factors() == std::vector<std::int64_t>{1, 0});
  check_form(m, f);
}

TEST_CASE("determinant") {
  CHECK(IntMatrix{{2, 1}, {7, 4}}.determinant() == 1);
  CHECK(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}.determinant() == -3);
  CHECK(IntMatrix(0, 0).determinant() == 1);
}

TEST_CASE("overflow raises instead of wrapping") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  const IntMatrix a{{big, 1}, {1, big}};
  CHECK_THROWS_AS(a * a, OverflowError);
  IntMatrix m{{big - 1, big}, {big, big - 2}};
  CHECK_THROWS_AS(m.add_row_multiple(0, 1, 2), OverflowError);
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(IntMatrix(2, 2) * IntMatrix(3, 1), InvalidArgument);
  CHECK_THROWS_AS(IntMatrix::from_rows(2, {{1, 2, 3}}), InvalidArgument);
}
