#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lietrans/rational.hpp"

namespace lietrans {

using Vec = std::vector<Rat>;

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);
// y += a * x
void axpy(const Rat& a, std::span<const Rat> x, std::span<Rat> y);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
std::string to_string(std::span<const Rat> v);

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
  // Every row must have exactly `cols` entries.
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const;
  Vec column(std::size_t j) const;

  void append_row(std::span<const Rat> r);

  Mat transpose() const;
  Vec apply(std::span<const Rat> x) const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  /// Row-major flattening, used when matrices are themselves unknowns.
  const Vec& flat() const { return a_; }
  static Mat from_flat(std::size_t rows, std::size_t cols, Vec data);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec a_;
};

Mat vstack(const Mat& top, const Mat& bottom);
// [A B] commutator AB - BA of square matrices.
Mat commutator(const Mat& a, const Mat& b);
std::string to_string(const Mat& m);

}  // namespace lietrans
