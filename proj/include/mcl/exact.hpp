#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcl/error.hpp"

namespace mcl {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}                      // NOLINT(implicit)
  Rational(int v) : v_(static_cast<long>(v)) {}    // NOLINT(implicit)
  Rational(const BigInt& v) : v_(v) {}             // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p", "p/q" with optional signs; surrounding whitespace ignored.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

enum class ArithOp { Add, Sub, Mul, Div };

inline Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_signed_int(std::string_view s, BigInt& out) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  out.set_str(std::string(s), 10);
  if (neg) out = -out;
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  bool ok = detail::parse_signed_int(s.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) ok = detail::parse_signed_int(s.substr(slash + 1), den);
  if (!ok) throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

using RatVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector operator*(const RatVector& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
    RatVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by rational Gauss-Jordan elimination.
inline RrefResult rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

/// Basis of {x : A x = 0}, one vector per free column, in column order.
inline std::vector<RatVector> nullspace(const RatMatrix& a) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b for a rectangular A. Throws SingularInconsistent when no
/// solution exists and SingularUnderdetermined when it is not unique;
/// inconsistency is reported first.
inline RatVector solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "rhs length differs from row count");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols())
    throw Error(Errc::SingularInconsistent, "system has no solution");
  if (pivots.size() < a.cols())
    throw Error(Errc::SingularUnderdetermined, "system has infinitely many solutions");
  RatVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
  return x;
}

/// Exact solution of a square system.
inline RatVector lin_solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "lin_solve needs a square matrix");
  return solve(a, b);
}

}  // namespace mcl
