#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsalg/rat.hpp"

namespace nsalg {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : v_(n) {}
  explicit Vector(std::vector<Rat> values) : v_(std::move(values)) {}
  Vector(std::initializer_list<Rat> values) : v_(values) {}

  static Vector basis(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return v_.size(); }
  const Rat& operator[](std::size_t i) const { return v_[i]; }
  Rat& operator[](std::size_t i) { return v_[i]; }
  std::span<const Rat> values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  /// this += c * o
  Vector& axpy(const Rat& c, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rat& c, Vector a);
  friend Vector operator-(Vector a);

  friend bool operator==(const Vector&, const Vector&) = default;

  /// Direct sum (a, b).
  static Vector concat(const Vector& a, const Vector& b);
  Vector slice(std::size_t offset, std::size_t count) const;

  std::string str() const;

 private:
  std::vector<Rat> v_;
};

/// Dense rows x cols matrix; apply() uses the column convention
/// e_j -> sum_i M(i, j) f_i.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> row_major);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Block matrix placing `m` at (row_offset, col_offset) inside a zero matrix.
  static Matrix embed(const Matrix& m, std::size_t rows, std::size_t cols, std::size_t row_offset,
                      std::size_t col_offset);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vector apply(const Vector& x) const;
  Vector column(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& c, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix pow(unsigned k) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

/// Polynomial sum_k coeffs[k] * m^k of a square matrix.
Matrix polynomial(const Matrix& m, std::span<const Rat> coeffs);

/// Bilinear map U x V -> W with dims (p, q, r), stored as c[i][j][k]:
/// (u_i, v_j) -> sum_k c[i][j][k] w_k.
///
/// The nonzero entries of every (i, j) slice are indexed once at construction,
/// so apply() only touches nonzero structure constants.
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(std::size_t p, std::size_t q, std::size_t r);
  BilinearMap(std::size_t p, std::size_t q, std::size_t r, std::vector<Rat> data);

  template <class F>
  static BilinearMap tabulate(std::size_t p, std::size_t q, std::size_t r, F&& on_basis) {
    std::vector<Rat> data(p * q * r);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        Vector w = on_basis(i, j);
        for (std::size_t k = 0; k < r; ++k) data[(i * q + j) * r + k] = w[k];
      }
    }
    return BilinearMap(p, q, r, std::move(data));
  }

  std::size_t left_dim() const noexcept { return p_; }
  std::size_t right_dim() const noexcept { return q_; }
  std::size_t out_dim() const noexcept { return r_; }

  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * q_ + j) * r_ + k]; }
  Vector on_basis(std::size_t i, std::size_t j) const;
  Vector apply(const Vector& x, const Vector& y) const;

  BilinearMap with_entry(std::size_t i, std::size_t j, std::size_t k, const Rat& value) const;
  BilinearMap scaled(const Rat& c) const;
  bool is_zero() const;
  std::span<const Rat> data() const noexcept { return data_; }

  friend BilinearMap operator+(const BilinearMap& a, const BilinearMap& b);
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.data_ == b.data_;
  }

 private:
  void index();

  std::size_t p_ = 0, q_ = 0, r_ = 0;
  std::vector<Rat> data_;
  // sparse_[i * q + j] lists the (k, c) with c != 0.
  std::vector<std::vector<std::pair<std::size_t, Rat>>> sparse_;
};

}  // namespace nsalg
