#include "curvelink/smith.hpp"

#include "curvelink/checked.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace curvelink {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  std::int64_t best_abs = 0;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const std::int64_t v = a(r, c);
      if (v == 0) continue;
      const std::int64_t av = checked::abs(v);
      if (!best || av < best_abs) {
        best = Pivot{r, c};
        best_abs = av;
      }
    }
  return best;
}

class Reducer {
public:
  explicit Reducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())),
        vinv_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t)
      if (!reduce_step(t)) break;
    return SmithForm{std::move(u_), std::move(a_), std::move(v_), std::move(vinv_)};
  }

private:
  // Row ops act on U; column ops act on V and, inversely, on V^-1.
  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    u_.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
    a_.add_row_multiple(dst, src, k);
    u_.add_row_multiple(dst, src, k);
  }
  void negate_row(std::size_t r) {
    a_.negate_row(r);
    u_.negate_row(r);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    v_.swap_cols(i, j);
    vinv_.swap_rows(i, j);
  }
  void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
    // V <- V * E with E = I + k e_src e_dst^T; E^-1 = I - k e_src e_dst^T.
    a_.add_col_multiple(dst, src, k);
    v_.add_col_multiple(dst, src, k);
    vinv_.add_row_multiple(src, dst, checked::neg(k));
  }

  // Returns false when the active submatrix is zero.
  bool reduce_step(std::size_t t) {
    for (;;) {
      auto pivot = smallest_entry(a_, t);
      if (!pivot) return false;
      swap_rows(t, pivot->row);
      swap_cols(t, pivot->col);

      const std::int64_t p = a_(t, t);
      bool leftover = false;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        add_row(r, t, checked::neg(a_(r, t) / p));
        leftover = leftover || a_(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        add_col(c, t, checked::neg(a_(t, c) / p));
        leftover = leftover || a_(t, c) != 0;
      }
      // A nonzero remainder is strictly smaller than |p|; repivot on it.
      if (leftover) continue;

      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < a_.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (a_(r, c) % p != 0) {
            offending = r;
            break;
          }
      if (offending) {
        // Pull the non-divisible row into the pivot row; the next pass
        // produces a remainder smaller than |p|.
        add_row(t, *offending, 1);
        continue;
      }
      if (p < 0) negate_row(t);
      return true;
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix vinv_;
};

} // namespace

std::vector<std::int64_t> SmithForm::invariant_factors() const {
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diagonal(i, i);
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (auto d : invariant_factors())
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

} // namespace curvelink
