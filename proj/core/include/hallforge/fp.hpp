#ifndef HALLFORGE_FP_HPP
#define HALLFORGE_FP_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hallforge/errors.hpp"

namespace hallforge {

/// Default cap on exhaustive enumerations (vectors of a space, members of a
/// Hom space, coset representatives). Checked before any loop starts.
inline constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t(1) << 20;

/// The prime field F_p. Construction rejects non-prime orders.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0

  friend bool operator==(PrimeField a, PrimeField b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Dense row-major matrix over F_p. Entries always reduced into [0, p).
class FMatrix {
 public:
  FMatrix() : rows_(0), cols_(0), field_(2) {}
  FMatrix(std::uint32_t rows, std::uint32_t cols, PrimeField f)
      : rows_(rows), cols_(cols), field_(f), e_(std::size_t(rows) * cols, 0) {}

  static FMatrix identity(std::uint32_t n, PrimeField f);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  PrimeField field() const { return field_; }

  std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return e_[std::size_t(r) * cols_ + c]; }
  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return e_[std::size_t(r) * cols_ + c]; }

  FMatrix operator*(const FMatrix& rhs) const;
  FMatrix operator+(const FMatrix& rhs) const;
  FMatrix operator-(const FMatrix& rhs) const;
  void add_scaled(const FMatrix& rhs, std::uint32_t scale);

  bool is_zero() const;
  bool operator==(const FMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
  }
  std::strong_ordering operator<=>(const FMatrix& rhs) const;

  /// Applies the matrix to a column vector.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

 private:
  std::uint32_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint32_t> e_;
};

/// Reduced row-echelon form and rank. Deterministic.
std::pair<FMatrix, std::uint32_t> rref(const FMatrix& m);

std::uint32_t rank(const FMatrix& m);

/// Basis of { x : m x = 0 }, one column vector per basis element.
std::vector<std::vector<std::uint32_t>> nullspace_basis(const FMatrix& m);

/// A subspace of F_p^n in canonical form: the basis matrix is in reduced
/// row-echelon form with no zero rows, so equal subspaces compare equal
/// bit for bit.
struct Subspace {
  std::uint32_t ambient_dim = 0;
  FMatrix basis;  // rank() rows, ambient_dim columns, rref

  std::uint32_t dim() const { return basis.rows(); }
  std::vector<std::uint32_t> pivot_cols() const;
  bool operator==(const Subspace& rhs) const {
    return ambient_dim == rhs.ambient_dim && basis == rhs.basis;
  }
};

/// All subspaces of F_p^n of a fixed dimension, in a deterministic order.
std::vector<Subspace> subspaces_of_dim(std::uint32_t ambient_dim, std::uint32_t d,
                                       PrimeField f, std::uint64_t limit = kDefaultEnumLimit);

/// Every subspace of F_p^n exactly once, ordered by dimension.
/// Fails with resource_limit_error when p^n exceeds the limit.
std::vector<Subspace> enumerate_subspaces(std::uint32_t ambient_dim, PrimeField f,
                                          std::uint64_t limit = kDefaultEnumLimit);

/// Number of invertible matrices in the F_p-span of the given square
/// matrices (the caller guarantees the span is closed under multiplication
/// and contains the identity). Brute force over all p^k combinations.
std::uint64_t count_units(const std::vector<FMatrix>& algebra_basis,
                          std::uint64_t limit = kDefaultEnumLimit);

/// |GL_m(F_p)| = prod_{i<m} (p^m - p^i).
mpz_class gl_order(std::uint32_t m, PrimeField f);

/// Gaussian binomial [n choose d]_p by the product formula.
mpz_class gaussian_binomial(std::uint32_t n, std::uint32_t d, PrimeField f);

/// p^e as an exact integer.
mpz_class field_power(PrimeField f, std::uint64_t e);

}  // namespace hallforge

#endif
