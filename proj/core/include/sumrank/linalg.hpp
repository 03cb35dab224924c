#pragma once

// Dense exact linear algebra over one level of a FieldTower.

#include <cstddef>
#include <vector>

#include "sumrank/fields.hpp"

namespace sumrank {

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Level level);
  Mat(std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Mat identity(std::size_t n, Level level);
  /// Row-major list of codes; convenient for golden values in tests.
  static Mat from_codes(std::size_t rows, std::size_t cols, const std::vector<std::uint32_t>& codes, Level level);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Level level() const noexcept { return level_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Elem>& entries() const noexcept { return entries_; }
  std::vector<Elem> row(std::size_t i) const;
  void append_row(const std::vector<Elem>& row);

  Mat transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const noexcept;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Level level_ = Level::mid;
  std::vector<Elem> entries_;
};

Mat mul(const FieldTower& f, const Mat& a, const Mat& b);
Mat add(const FieldTower& f, const Mat& a, const Mat& b);
Mat scale(const FieldTower& f, Elem c, const Mat& a);

/// Determinant by elimination; the 0×0 determinant is 1.
Elem det(const FieldTower& f, const Mat& m);
std::size_t rank(const FieldTower& f, const Mat& m);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const FieldTower& f, Mat& m);

/// Solves a·x = b for square invertible a.
std::vector<Elem> solve(const FieldTower& f, const Mat& a, const std::vector<Elem>& b);

/// Row space of a matrix, kept as an independent set of rows.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, Level level) : ambient_dim_(ambient_dim), basis_(0, ambient_dim, level) {}

  /// Span of the given rows (dependent rows are dropped).
  static Subspace span(const FieldTower& f, const Mat& rows);
  static Subspace whole(std::size_t ambient_dim, Level level);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  Level level() const noexcept { return basis_.level(); }
  const Mat& basis() const noexcept { return basis_; }
  bool contains(const FieldTower& f, const std::vector<Elem>& v) const;

 private:
  std::size_t ambient_dim_;
  Mat basis_;
};

struct RankKernel {
  std::size_t rank;
  Subspace kernel;  // right kernel: m·k^T = 0
};

RankKernel rank_kernel(const FieldTower& f, const Mat& m);

Subspace intersect(const FieldTower& f, const Subspace& a, const Subspace& b);
Subspace sum(const FieldTower& f, const Subspace& a, const Subspace& b);

/// For H = [[M, w], [w'^T, c]] returns c − w'^T M⁻¹ w.
Elem schur_residual(const FieldTower& f, const Mat& h);

}  // namespace sumrank
