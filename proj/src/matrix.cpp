#include "rescone/matrix.hpp"

#include <sstream>
#include <utility>

#include "rescone/error.hpp"

namespace rescone {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(Errc::dimension_mismatch, std::to_string(rows_) + "x" + std::to_string(cols_) +
                                              " matrix given " + std::to_string(entries_.size()) +
                                              " entries");
  }
}

RatMatrix RatMatrix::identity(std::size_t size) {
  std::vector<Rational> e(size * size);
  for (std::size_t i = 0; i < size; ++i) e[i * size + i] = 1;
  return {size, size, std::move(e)};
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::vector<Rational> e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::dimension_mismatch, "ragged rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return {rows.size(), cols, std::move(e)};
}

RatMatrix RatMatrix::from_integers(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return from_rows(out);
}

RatMatrix RatMatrix::transpose() const {
  std::vector<Rational> e(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = (*this)(r, c);
  return {cols_, rows_, std::move(e)};
}

RatMatrix RatMatrix::with_row_appended(std::span<const Rational> row) const {
  if (rows_ > 0 && row.size() != cols_) throw Error(Errc::dimension_mismatch, "appended row length");
  std::vector<Rational> e = entries_;
  e.insert(e.end(), row.begin(), row.end());
  return {rows_ + 1, row.size(), std::move(e)};
}

RatMatrix RatMatrix::without_row(std::size_t r) const {
  if (r >= rows_) throw Error(Errc::dimension_mismatch, "row index out of range");
  std::vector<Rational> e;
  e.reserve((rows_ - 1) * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == r) continue;
    auto src = row(i);
    e.insert(e.end(), src.begin(), src.end());
  }
  return {rows_ - 1, cols_, std::move(e)};
}

RatVector RatMatrix::multiply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "vector length");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RatMatrix::is_integer() const {
  for (const auto& x : entries_)
    if (!x.is_integer()) return false;
  return true;
}

namespace {

struct Echelon {
  std::vector<Rational> e;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan over Q.
Echelon reduce(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon out{m.entries(), {}};
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return out.e[r * cols + c]; };
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && at(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(sel, k), at(pr, k));
    const Rational inv = Rational(1) / at(pr, c);
    for (std::size_t k = c; k < cols; ++k)
      if (!at(pr, k).is_zero()) at(pr, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || at(r, c).is_zero()) continue;
      const Rational f = at(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!at(pr, k).is_zero()) at(r, k) -= f * at(pr, k);
    }
    out.pivots.push_back(c);
    ++pr;
  }
  return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return reduce(m).pivots.size(); }

RatMatrix rref(const RatMatrix& m) {
  auto red = reduce(m);
  return {m.rows(), m.cols(), std::move(red.e)};
}

std::vector<std::size_t> pivot_columns(const RatMatrix& m) { return reduce(m).pivots; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto red = reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.e[r * cols + f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix parse_csv(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    RatVector row;
    while (true) {
      const auto comma = line.find(',');
      try {
        row.push_back(Rational::parse(line.substr(0, comma)));
      } catch (const Error&) {
        throw Error(Errc::parse_error, "bad matrix token on line " + std::to_string(line_no));
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(Errc::parse_error, "ragged matrix row on line " + std::to_string(line_no));
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

std::string to_csv(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace rescone
