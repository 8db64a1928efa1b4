#include "nsalg/linalg.hpp"

#include <sstream>

#include "nsalg/error.hpp"

namespace nsalg {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Vector Vector::basis(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : v_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same(size(), o.size(), "vector add");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!o.v_[i].is_zero()) v_[i] += o.v_[i];
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_same(size(), o.size(), "vector sub");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!o.v_[i].is_zero()) v_[i] -= o.v_[i];
  }
  return *this;
}

Vector& Vector::axpy(const Rat& c, const Vector& o) {
  require_same(size(), o.size(), "vector axpy");
  if (c.is_zero()) return *this;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!o.v_[i].is_zero()) v_[i] += c * o.v_[i];
  }
  return *this;
}

Vector operator*(const Rat& c, Vector a) {
  for (auto& x : a.v_) x = c * x;
  return a;
}

Vector operator-(Vector a) {
  for (auto& x : a.v_) x = -x;
  return a;
}

Vector Vector::concat(const Vector& a, const Vector& b) {
  std::vector<Rat> v(a.v_);
  v.insert(v.end(), b.v_.begin(), b.v_.end());
  return Vector(std::move(v));
}

Vector Vector::slice(std::size_t offset, std::size_t count) const {
  return Vector(std::vector<Rat>(v_.begin() + static_cast<std::ptrdiff_t>(offset),
                                 v_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ", ";
    os << v_[i];
  }
  os << ')';
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> row_major)
    : rows_(rows), cols_(cols), a_(std::move(row_major)) {
  require_same(a_.size(), rows * cols, "matrix data");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::embed(const Matrix& m, std::size_t rows, std::size_t cols, std::size_t row_offset,
                     std::size_t col_offset) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(row_offset + i, col_offset + j) = m(i, j);
  }
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  require_same(cols_, x.size(), "matrix apply");
  Vector y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same(rows_, o.rows_, "matrix add rows");
  require_same(cols_, o.cols_, "matrix add cols");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix operator-(Matrix a, const Matrix& b) {
  require_same(a.rows_, b.rows_, "matrix sub rows");
  require_same(a.cols_, b.cols_, "matrix sub cols");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.cols_, b.rows_, "matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator*(const Rat& c, Matrix a) {
  for (auto& x : a.a_) x = c * x;
  return a;
}

Matrix Matrix::pow(unsigned k) const {
  require_same(rows_, cols_, "matrix power");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix polynomial(const Matrix& m, std::span<const Rat> coeffs) {
  // Horner
  Matrix acc = Matrix::zero(m.rows(), m.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m + *it * Matrix::identity(m.rows());
  }
  return acc;
}

BilinearMap::BilinearMap(std::size_t p, std::size_t q, std::size_t r)
    : p_(p), q_(q), r_(r), data_(p * q * r), sparse_(p * q) {}

BilinearMap::BilinearMap(std::size_t p, std::size_t q, std::size_t r, std::vector<Rat> data)
    : p_(p), q_(q), r_(r), data_(std::move(data)) {
  require_same(data_.size(), p * q * r, "bilinear map data");
  index();
}

void BilinearMap::index() {
  sparse_.assign(p_ * q_, {});
  for (std::size_t i = 0; i < p_; ++i) {
    for (std::size_t j = 0; j < q_; ++j) {
      auto& slot = sparse_[i * q_ + j];
      for (std::size_t k = 0; k < r_; ++k) {
        const Rat& c = at(i, j, k);
        if (!c.is_zero()) slot.emplace_back(k, c);
      }
    }
  }
}

Vector BilinearMap::on_basis(std::size_t i, std::size_t j) const {
  Vector w(r_);
  for (const auto& [k, c] : sparse_[i * q_ + j]) w[k] = c;
  return w;
}

Vector BilinearMap::apply(const Vector& x, const Vector& y) const {
  require_same(x.size(), p_, "bilinear left argument");
  require_same(y.size(), q_, "bilinear right argument");
  Vector w(r_);
  for (std::size_t i = 0; i < p_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < q_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& slot = sparse_[i * q_ + j];
      if (slot.empty()) continue;
      Rat s = x[i] * y[j];
      for (const auto& [k, c] : slot) w[k] += s * c;
    }
  }
  return w;
}

BilinearMap BilinearMap::with_entry(std::size_t i, std::size_t j, std::size_t k, const Rat& value) const {
  std::vector<Rat> data = data_;
  data[(i * q_ + j) * r_ + k] = value;
  return BilinearMap(p_, q_, r_, std::move(data));
}

BilinearMap BilinearMap::scaled(const Rat& c) const {
  std::vector<Rat> data = data_;
  for (auto& x : data) x = c * x;
  return BilinearMap(p_, q_, r_, std::move(data));
}

bool BilinearMap::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

BilinearMap operator+(const BilinearMap& a, const BilinearMap& b) {
  require_same(a.p_, b.p_, "bilinear add");
  require_same(a.q_, b.q_, "bilinear add");
  require_same(a.r_, b.r_, "bilinear add");
  std::vector<Rat> data = a.data_;
  for (std::size_t i = 0; i < data.size(); ++i) data[i] += b.data_[i];
  return BilinearMap(a.p_, a.q_, a.r_, std::move(data));
}

}  // namespace nsalg
