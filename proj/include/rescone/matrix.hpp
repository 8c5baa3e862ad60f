#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rescone/rational.hpp"

namespace rescone {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Immutable once built; every
/// operation returns a new value.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t size);
  /// All rows must share one length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_integers(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix transpose() const;
  RatMatrix with_row_appended(std::span<const Rational> row) const;
  RatMatrix without_row(std::size_t r) const;
  RatVector multiply(std::span<const Rational> v) const;
  bool is_integer() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RatMatrix& m);

/// Reduced row-echelon form. Pivots are chosen column by column, taking the
/// first row (from the current pivot row down) with a nonzero entry.
RatMatrix rref(const RatMatrix& m);

/// Column indices of the pivots of rref(m), in increasing order.
std::vector<std::size_t> pivot_columns(const RatMatrix& m);

/// Basis of { v : m v = 0 }, one vector per free column of rref(m).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Comma-separated integer or "p/q" tokens, one row per line, no header.
RatMatrix parse_csv(std::string_view text);
std::string to_csv(const RatMatrix& m);

}  // namespace rescone
