#include "lietrans/matrix.hpp"

#include <sstream>

#include "lietrans/errors.hpp"

namespace lietrans {

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rat> v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
  return s;
}

void axpy(const Rat& a, std::span<const Rat> x, std::span<Rat> y) {
  if (x.size() != y.size()) throw DimensionError("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i].add_mul(a, x[i]);
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec r(v);
  for (Rat& x : r) x *= s;
  return r;
}

std::string to_string(std::span<const Rat> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("Mat::from_rows: ragged rows");
    std::size_t j = 0;
    for (const Rat& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("Mat::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("Mat::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_flat(std::size_t rows, std::size_t cols, Vec data) {
  if (data.size() != rows * cols) throw DimensionError("Mat::from_flat: size mismatch");
  Mat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.a_ = std::move(data);
  return m;
}

Vec Mat::row_vec(std::size_t i) const {
  auto r = row(i);
  return Vec(r.begin(), r.end());
}

Vec Mat::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Mat::append_row(std::span<const Rat> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionError("Mat::append_row: length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::apply(std::span<const Rat> x) const {
  if (x.size() != cols_) throw DimensionError("Mat::apply: vector length mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) y[i].add_mul(r[j], x[j]);
  }
  return y;
}

bool Mat::is_zero() const { return lietrans::is_zero(a_); }

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("Mat product: inner dimension mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_mul(aik, b(k, j));
    }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Mat sum: shape mismatch");
  Mat c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Mat difference: shape mismatch");
  Mat c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Mat operator*(const Rat& s, const Mat& m) {
  Mat c(m);
  for (Rat& x : c.a_) x *= s;
  return c;
}

Mat vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionError("vstack: column mismatch");
  Vec data = top.flat();
  data.insert(data.end(), bottom.flat().begin(), bottom.flat().end());
  return Mat::from_flat(top.rows() + bottom.rows(), top.cols(), std::move(data));
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    os << to_string(m.row(i));
  }
  os << ']';
  return os.str();
}

}  // namespace lietrans
