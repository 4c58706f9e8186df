#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace wgideal {

/// Integer Laurent polynomial in q.
///
/// Stored as a lowest exponent plus a dense coefficient run with both ends
/// nonzero. Zero is the empty run with lowest exponent 0, so structural
/// equality is polynomial equality. All arithmetic is checked and throws
/// Error(Overflow) rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers embed implicitly
  LaurentPoly(int lo, std::vector<std::int64_t> coeffs);

  /// c * q^e
  static LaurentPoly monomial(std::int64_t c, int e);
  static LaurentPoly q() { return monomial(1, 1); }
  static LaurentPoly q_inv() { return monomial(1, -1); }

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  /// Highest exponent; only meaningful when nonzero.
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t coeff(int e) const;
  std::int64_t constant_term() const { return coeff(0); }

  /// Membership in Z[q].
  bool in_A_plus() const { return is_zero() || lo_ >= 0; }
  /// Membership in qZ[q].
  bool in_qA_plus() const { return is_zero() || lo_ >= 1; }
  /// Polynomial in q^2: in Z[q] with only even exponents present.
  bool is_poly_in_q2() const;

  /// q -> q^-1
  LaurentPoly bar() const;
  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Renders like "q^-1 + 2 - 3q^2 + q^3"; zero renders as "0".
  std::string to_string() const;

 private:
  void normalize();

  int lo_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// {"lo": e, "coeffs": [...]}
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

/// Dense rectangular matrix over Z[q, q^-1], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<LaurentPoly> column(std::size_t c) const;
  PolyMatrix bar() const;
  PolyMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_scale(const LaurentPoly& s, const PolyMatrix& a);
/// Product using the OpenMP kernel; exact, result independent of thread count.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
bool mat_eq(const PolyMatrix& a, const PolyMatrix& b);

/// [..AB]_n: n alternating factors with B rightmost (...ABAB).
/// n = 0 gives the identity of the matching size.
PolyMatrix alternating_product(const PolyMatrix& a, const PolyMatrix& b, int n);

/// Inverse of a unitriangular matrix (upper, 1 on the diagonal) by back
/// substitution. Throws InvalidArgument if the input is not unitriangular.
PolyMatrix unitriangular_inverse(const PolyMatrix& upper);

namespace serial {
// Straight triple loop kept as the reference the parallel kernel is tested
// and benchmarked against.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix alternating_product(const PolyMatrix& a, const PolyMatrix& b, int n);
}  // namespace serial

}  // namespace wgideal
