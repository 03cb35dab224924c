#include "sumrank/linalg.hpp"

#include <algorithm>

namespace sumrank {

Mat::Mat(std::size_t rows, std::size_t cols, Level level)
    : rows_(rows), cols_(cols), level_(level), entries_(rows * cols, Elem{0, level}) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(ErrorCode::length_mismatch, "entry count does not match shape");
  if (!entries_.empty()) level_ = entries_.front().level;
  for (const auto& e : entries_)
    if (e.level != level_) throw Error(ErrorCode::level_mismatch, "matrix entries at mixed levels");
}

Mat Mat::identity(std::size_t n, Level level) {
  Mat m(n, n, level);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1, level};
  return m;
}

Mat Mat::from_codes(std::size_t rows, std::size_t cols, const std::vector<std::uint32_t>& codes, Level level) {
  std::vector<Elem> e;
  e.reserve(codes.size());
  for (auto c : codes) e.push_back({c, level});
  Mat m(rows, cols, std::move(e));
  m.level_ = level;
  return m;
}

std::vector<Elem> Mat::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void Mat::append_row(const std::vector<Elem>& row) {
  if (row.size() != cols_) throw Error(ErrorCode::length_mismatch, "row length does not match matrix");
  for (const auto& e : row)
    if (e.level != level_) throw Error(ErrorCode::level_mismatch, "row entry at wrong level");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, level_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::length_mismatch, "block outside matrix");
  Mat b(nr, nc, level_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Elem& e) { return e.code == 0; });
}

Mat mul(const FieldTower& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::length_mismatch, "inner dimensions differ");
  if (a.level() != b.level()) throw Error(ErrorCode::level_mismatch, "matrix levels differ");
  Mat c(a.rows(), b.cols(), a.level());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

Mat add(const FieldTower& f, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::length_mismatch, "shapes differ");
  Mat c(a.rows(), a.cols(), a.level());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Mat scale(const FieldTower& f, Elem s, const Mat& a) {
  Mat c(a.rows(), a.cols(), a.level());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  return c;
}

std::vector<std::size_t> rref(const FieldTower& f, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Elem inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Elem factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Elem det(const FieldTower& f, const Mat& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::not_square, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  Mat m = input;
  Elem result{1, input.level()};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Elem{0, input.level()};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      result = f.neg(result);
    }
    const Elem pivot = m(col, col);
    result = f.mul(result, pivot);
    const Elem inv = f.inv(pivot);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Elem factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return result;
}

std::size_t rank(const FieldTower& f, const Mat& m) {
  Mat copy = m;
  return rref(f, copy).size();
}

std::vector<Elem> solve(const FieldTower& f, const Mat& a, const std::vector<Elem>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(ErrorCode::length_mismatch, "solve expects square system");
  Mat aug(n, n + 1, a.level());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots.back() >= n) throw Error(ErrorCode::division_by_zero, "singular system");
  std::vector<Elem> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Subspace Subspace::span(const FieldTower& f, const Mat& rows) {
  Mat m = rows;
  const auto pivots = rref(f, m);
  Subspace s(rows.cols(), rows.level());
  s.basis_ = m.block(0, 0, pivots.size(), rows.cols());
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim, Level level) {
  Subspace s(ambient_dim, level);
  s.basis_ = Mat::identity(ambient_dim, level);
  return s;
}

bool Subspace::contains(const FieldTower& f, const std::vector<Elem>& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::ambient_mismatch, "vector length differs from ambient dimension");
  Mat m = basis_;
  m.append_row(v);
  return rank(f, m) == dim();
}

RankKernel rank_kernel(const FieldTower& f, const Mat& input) {
  Mat m = input;
  const auto pivots = rref(f, m);
  const std::size_t n = input.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  Mat kernel(0, n, input.level());
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, Elem{0, input.level()});
    v[free] = Elem{1, input.level()};
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
    kernel.append_row(v);
  }
  Subspace k(n, input.level());
  k = Subspace::span(f, kernel);
  return {pivots.size(), k};
}

Subspace intersect(const FieldTower& f, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::ambient_mismatch, "subspaces live in different spaces");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n, a.level());
  // x·A = y·B  <=>  (x, −y) in the left kernel of [A; B].
  Mat stacked(0, n, a.level());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  const auto left = rank_kernel(f, stacked.transpose()).kernel;

  Mat vectors(0, n, a.level());
  for (std::size_t t = 0; t < left.dim(); ++t) {
    std::vector<Elem> v(n, Elem{0, a.level()});
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Elem c = left.basis()(t, i);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(c, a.basis()(i, j)));
    }
    vectors.append_row(v);
  }
  return Subspace::span(f, vectors);
}

Subspace sum(const FieldTower& f, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::ambient_mismatch, "subspaces live in different spaces");
  Mat stacked(0, a.ambient_dim(), a.level());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  return Subspace::span(f, stacked);
}

Elem schur_residual(const FieldTower& f, const Mat& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw Error(ErrorCode::not_square, "Schur residual needs a non-empty square matrix");
  const std::size_t n = h.rows() - 1;
  const Elem corner = h(n, n);
  if (n == 0) return corner;
  const Mat lead = h.block(0, 0, n, n);
  if (det(f, lead).is_zero()) throw Error(ErrorCode::singular_leading_block, "leading block is singular");
  std::vector<Elem> col(n), row(n);
  for (std::size_t i = 0; i < n; ++i) {
    col[i] = h(i, n);
    row[i] = h(n, i);
  }
  const auto z = solve(f, lead, col);
  Elem acc = corner;
  for (std::size_t i = 0; i < n; ++i) acc = f.sub(acc, f.mul(row[i], z[i]));
  return acc;
}

}  // namespace sumrank
