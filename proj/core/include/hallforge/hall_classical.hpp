#ifndef HALLFORGE_HALL_CLASSICAL_HPP
#define HALLFORGE_HALL_CLASSICAL_HPP

#include <compare>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hallforge/coeff.hpp"
#include "hallforge/rep.hpp"

namespace hallforge {

/// How to count submodules when evaluating a Hall number.
enum class GRoute {
  kAuto,    // whichever enumeration is cheaper
  kSubrep,  // enumerate arrow-compatible subspace tuples of the big class
  kExt,     // enumerate extension classes and read the count off the
            // extension-middle distribution
};

/// Hall number g^L_{M,N}: submodules of L isomorphic to N with quotient
/// isomorphic to M. Zero without any enumeration when the classes are
/// dimension-incompatible.
mpz_class hall_g(const Catalog& cat, ClassId L, ClassId M, ClassId N,
                 GRoute route = GRoute::kAuto);

/// |Ext^1(M,N)_L|, the number of extension classes with middle term L.
mpz_class ext_middle_count(const Catalog& cat, ClassId M, ClassId N, ClassId L);

/// A monomial u_{[M]} K_alpha of the twisted extended Hall algebra.
struct RHKey {
  ClassId m = 0;
  DimVector k;
  auto operator<=>(const RHKey&) const = default;
};

/// Finite linear combination; zero coefficients are never stored.
using RHElement = std::map<RHKey, Coeff>;

/// The twisted extended Hall algebra of the catalog's module category:
/// u-generators with the square-root twist, K-elements commuting by the
/// symmetric Euler form, the standard comultiplication and bilinear pairing.
class RingelHall {
 public:
  explicit RingelHall(const Catalog& cat) : cat_(cat) {}

  const Catalog& cat() const { return cat_; }
  std::uint32_t q() const { return cat_.field().p(); }

  RHElement monomial(ClassId m, DimVector k, Coeff c) const;
  RHElement unit() const;

  RHElement product(const RHElement& x, const RHElement& y) const;

  struct DeltaTerm {
    RHKey left, right;
    Coeff coeff;
  };
  /// Comultiplication of a basis monomial; always a finite sum here since
  /// both tensor factors have dimension bounded by the input class.
  std::vector<DeltaTerm> comult(const RHKey& key) const;
  Coeff counit(const RHElement& x) const;

  Coeff pairing_monomial(const RHKey& a, const RHKey& b) const;
  Coeff pairing(const RHElement& x, const RHElement& y) const;

  struct GreenResult {
    bool holds = false;
    Coeff lhs, rhs;
  };
  /// Evaluates both sides of Green's formula exactly.
  GreenResult green_check(ClassId M, ClassId N, ClassId Mp, ClassId Np) const;

  /// u_M u_N with trivial K-parts; memoized.
  const RHElement& basis_product(ClassId m, ClassId n) const;

 private:
  const Catalog& cat_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<ClassId, ClassId>, RHElement> prod_memo_;
};

/// Runs fn(quotient, sub, count) over every nonzero submodule count of L.
template <typename Fn>
void for_each_hall_entry(const Catalog& cat, ClassId L, Fn&& fn) {
  const DimVector& d = cat.dim(L);
  DimVector e(d.size(), 0);
  for (;;) {
    for (const auto& [pair, count] : cat.g_slice(L, e)) fn(pair.first, pair.second, count);
    std::size_t k = 0;
    while (k < e.size() && ++e[k] > d[k]) e[k++] = 0;
    if (k == e.size()) break;
  }
}

}  // namespace hallforge

#endif
