#include "wgideal/laurent.hpp"

#include <algorithm>

#include "wgideal/error.hpp"

namespace wgideal {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient addition");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient product");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int lo, std::vector<std::int64_t> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) {
  if (c == 0) return {};
  return LaurentPoly(e, {c});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  lo_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

bool LaurentPoly::is_poly_in_q2() const {
  if (!in_A_plus()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && (lo_ + static_cast<int>(i)) % 2 != 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-hi(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(this->hi(), o.hi());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(lo_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(o.lo_ - lo) + i];
    slot = checked::add(slot, o.coeffs_[i]);
  }
  lo_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = checked::mul(c, -1);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked::add(out[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly(a.lo_ + b.lo_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = lo_ + static_cast<int>(i);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto c : p.coeffs()) coeffs.push_back(c);
  return {{"lo", p.lo()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("coeffs")) {
    throw Error(ErrorCode::Parse, "polynomial must be {\"lo\", \"coeffs\"}");
  }
  return LaurentPoly(j.at("lo").get<int>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<LaurentPoly> PolyMatrix::column(std::size_t c) const {
  std::vector<LaurentPoly> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

PolyMatrix PolyMatrix::bar() const {
  PolyMatrix out = *this;
  for (auto& p : out.data_) p = p.bar();
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

void require_conformant(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
}

template <class Mul>
PolyMatrix alternating(const PolyMatrix& a, const PolyMatrix& b, int n, Mul&& mul) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "alternating product needs equal square matrices");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative factor count");
  PolyMatrix acc = PolyMatrix::identity(a.rows());
  // Build from the right: factor i (counting from the right, 0-based) is B
  // when i is even, A when odd.
  for (int i = 0; i < n; ++i) acc = mul(i % 2 == 0 ? b : a, acc);
  return acc;
}

}  // namespace

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

PolyMatrix mat_scale(const LaurentPoly& s, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_conformant(a, b);
  const auto rows = static_cast<std::int64_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  PolyMatrix out(a.rows(), cols);
  // Rows are independent; each thread owns whole output rows. Exceptions
  // cannot cross the OpenMP region, so the first one is captured and rethrown.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t r = 0; r < rows; ++r) {
    try {
      const auto row = static_cast<std::size_t>(r);
      for (std::size_t k = 0; k < inner; ++k) {
        const LaurentPoly& lhs = a(row, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < cols; ++c) {
          const LaurentPoly& rhs = b(k, c);
          if (!rhs.is_zero()) out(row, c) += lhs * rhs;
        }
      }
    } catch (...) {
#pragma omp critical(wgideal_mat_mul_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

bool mat_eq(const PolyMatrix& a, const PolyMatrix& b) { return a == b; }

PolyMatrix alternating_product(const PolyMatrix& a, const PolyMatrix& b, int n) {
  return alternating(a, b, n, [](const PolyMatrix& x, const PolyMatrix& y) { return mat_mul(x, y); });
}

PolyMatrix unitriangular_inverse(const PolyMatrix& upper) {
  const std::size_t n = upper.rows();
  if (upper.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (upper(i, i) != LaurentPoly(1)) throw Error(ErrorCode::InvalidArgument, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (!upper(i, j).is_zero()) throw Error(ErrorCode::InvalidArgument, "matrix is not upper triangular");
    }
  }
  // Solve U X = I column by column, bottom-up.
  PolyMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    inv(c, c) = 1;
    for (std::size_t r = c; r-- > 0;) {
      LaurentPoly acc;
      for (std::size_t k = r + 1; k <= c; ++k) {
        if (!upper(r, k).is_zero() && !inv(k, c).is_zero()) acc += upper(r, k) * inv(k, c);
      }
      inv(r, c) = -acc;
    }
  }
  return inv;
}

namespace serial {

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_conformant(a, b);
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t k = 0; k < a.cols(); ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

PolyMatrix alternating_product(const PolyMatrix& a, const PolyMatrix& b, int n) {
  return alternating(a, b, n, [](const PolyMatrix& x, const PolyMatrix& y) { return serial::mat_mul(x, y); });
}

}  // namespace serial

}  // namespace wgideal
