#include "hallforge/fp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hallforge {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw std::invalid_argument("field order must be prime, got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

FMatrix FMatrix::identity(std::uint32_t n, PrimeField f) {
  FMatrix m(n, n, f);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1 % f.p();
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
  FMatrix out(rows_, rhs.cols_, field_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t k = 0; k < cols_; ++k) {
      std::uint32_t a = at(i, k);
      if (!a) continue;
      for (std::uint32_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
    }
  return out;
}

FMatrix FMatrix::operator+(const FMatrix& rhs) const {
  FMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.add(e_[i], rhs.e_[i]);
  return out;
}

FMatrix FMatrix::operator-(const FMatrix& rhs) const {
  FMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.sub(e_[i], rhs.e_[i]);
  return out;
}

void FMatrix::add_scaled(const FMatrix& rhs, std::uint32_t scale) {
  for (std::size_t i = 0; i < e_.size(); ++i)
    e_[i] = field_.add(e_[i], field_.mul(scale, rhs.e_[i]));
}

bool FMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
}

std::strong_ordering FMatrix::operator<=>(const FMatrix& rhs) const {
  if (auto c = rows_ <=> rhs.rows_; c != 0) return c;
  if (auto c = cols_ <=> rhs.cols_; c != 0) return c;
  return e_ <=> rhs.e_;
}

std::vector<std::uint32_t> FMatrix::apply(const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < cols_; ++j) acc += std::uint64_t(at(i, j)) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % field_.p());
  }
  return out;
}

std::pair<FMatrix, std::uint32_t> rref(const FMatrix& m) {
  FMatrix a = m;
  PrimeField f = m.field();
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::uint32_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::uint32_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    std::uint32_t s = f.inv(a.at(r, c));
    for (std::uint32_t j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), s);
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      std::uint32_t t = a.at(i, c);
      for (std::uint32_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(r, j)));
    }
    ++r;
  }
  return {a, r};
}

std::uint32_t rank(const FMatrix& m) { return rref(m).second; }

std::vector<std::vector<std::uint32_t>> nullspace_basis(const FMatrix& m) {
  auto [a, r] = rref(m);
  PrimeField f = m.field();
  std::vector<std::uint32_t> pivot_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::uint32_t i = 0; i < r; ++i) {
    std::uint32_t c = 0;
    while (a.at(i, c) == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[c] = 1;
    for (std::uint32_t i = 0; i < r; ++i) v[pivot_of_row[i]] = f.neg(a.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint32_t> Subspace::pivot_cols() const {
  std::vector<std::uint32_t> cols;
  for (std::uint32_t i = 0; i < basis.rows(); ++i) {
    std::uint32_t c = 0;
    while (basis.at(i, c) == 0) ++c;
    cols.push_back(c);
  }
  return cols;
}

namespace {

void check_vector_count(std::uint32_t n, PrimeField f, std::uint64_t limit) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (count > limit / f.p()) throw resource_limit_error("subspace enumeration over limit");
    count *= f.p();
  }
  if (count > limit) throw resource_limit_error("subspace enumeration over limit");
}

}  // namespace

std::vector<Subspace> subspaces_of_dim(std::uint32_t n, std::uint32_t d, PrimeField f,
                                       std::uint64_t limit) {
  check_vector_count(n, f, limit);
  std::vector<Subspace> out;
  if (d > n) return out;
  if (d == 0) {
    out.push_back(Subspace{n, FMatrix(0, n, f)});
    return out;
  }
  // A subspace in rref form is determined by its pivot columns plus the free
  // entries right of each pivot in non-pivot columns.
  std::vector<std::uint32_t> piv(d);
  for (std::uint32_t i = 0; i < d; ++i) piv[i] = i;
  const std::uint32_t p = f.p();
  for (;;) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;  // (row, col)
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t c = piv[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
    std::vector<std::uint32_t> vals(free_pos.size(), 0);
    for (;;) {
      FMatrix b(d, n, f);
      for (std::uint32_t i = 0; i < d; ++i) b.at(i, piv[i]) = 1;
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        b.at(free_pos[k].first, free_pos[k].second) = vals[k];
      out.push_back(Subspace{n, std::move(b)});
      std::size_t k = 0;
      while (k < vals.size() && ++vals[k] == p) vals[k++] = 0;
      if (k == vals.size()) break;
    }
    // next pivot combination in lexicographic order
    std::int64_t i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (std::uint32_t j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t n, PrimeField f, std::uint64_t limit) {
  check_vector_count(n, f, limit);
  std::vector<Subspace> all;
  for (std::uint32_t d = 0; d <= n; ++d) {
    auto part = subspaces_of_dim(n, d, f, limit);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::uint64_t count_units(const std::vector<FMatrix>& basis, std::uint64_t limit) {
  if (basis.empty()) return 1;  // the zero algebra: only the empty endomorphism
  PrimeField f = basis.front().field();
  const std::uint32_t n = basis.front().rows();
  const std::uint32_t p = f.p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > limit / p) throw resource_limit_error("unit count over limit");
    total *= p;
  }
  if (total > limit) throw resource_limit_error("unit count over limit");

  std::vector<std::uint32_t> coeffs(basis.size(), 0);
  std::uint64_t units = 0;
  for (;;) {
    FMatrix m(n, n, f);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k]) m.add_scaled(basis[k], coeffs[k]);
    if (rank(m) == n) ++units;
    std::size_t k = 0;
    while (k < coeffs.size() && ++coeffs[k] == p) coeffs[k++] = 0;
    if (k == coeffs.size()) break;
  }
  return units;
}

mpz_class gl_order(std::uint32_t m, PrimeField f) {
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), f.p(), m);
  mpz_class out = 1, pi = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    out *= pm - pi;
    pi *= f.p();
  }
  return out;
}

mpz_class gaussian_binomial(std::uint32_t n, std::uint32_t d, PrimeField f) {
  if (d > n) return 0;
  mpz_class num = 1, den = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), f.p(), n - i);
    mpz_ui_pow_ui(b.get_mpz_t(), f.p(), d - i);
    num *= a - 1;
    den *= b - 1;
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw internal_error("gaussian binomial division not exact");
  return q;
}

mpz_class field_power(PrimeField f, std::uint64_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), f.p(), e);
  return out;
}

}  // namespace hallforge
