#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace curvelink {

/// Dense row-major integer matrix. All arithmetic is overflow-checked.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stack rows; every row must have `cols` entries.
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<std::int64_t> row_vector(std::size_t r) const;

  // Elementary operations used by the normal-form code.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  void append_row(std::span<const std::int64_t> values);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  std::int64_t determinant() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Row vector times matrix.
std::vector<std::int64_t> multiply(std::span<const std::int64_t> v, const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace curvelink
