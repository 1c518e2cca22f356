#ifndef HALLFORGE_DH1_HPP
#define HALLFORGE_DH1_HPP

#include <map>
#include <mutex>

#include "hallforge/hall_classical.hpp"
#include "hallforge/hall_derived.hpp"

namespace hallforge {

/// Element of a 1-periodic Hall algebra: classes of the module category
/// index the basis in both presentations (u-generators and mu-generators).
using DH1Element = std::map<ClassId, Coeff>;

/// The two 1-periodic derived Hall algebras over the catalog's module
/// category and the rescaling isomorphism between them.
class DH1 {
 public:
  explicit DH1(const Catalog& cat) : cat_(cat), dk_(cat) {}

  const Catalog& cat() const { return cat_; }
  const DerivedKernel& kernel() const { return dk_; }
  std::uint32_t q() const { return cat_.field().p(); }

  DH1Element monomial(ClassId m, Coeff c) const;
  DH1Element unit() const;

  /// u_A u_B = v^<A,B> sum_{I,M} H^M_{I[1]+A, B+I[-1]} / a_I  u_M.
  DH1Element product_u(const DH1Element& x, const DH1Element& y) const;

  /// Structure constant G^M_{A,B} of the odd-periodic presentation,
  /// evaluated through classical submodule counts.
  Coeff g_structure(ClassId A, ClassId B, ClassId M) const;
  using GTable = std::map<ClassId, Coeff>;
  const GTable& g_all(ClassId A, ClassId B) const;

  /// mu_A mu_B = sum_M G^M_{A,B} mu_M.
  DH1Element product_mu(const DH1Element& x, const DH1Element& y) const;

  /// Automorphism count in the 1-periodic category: a_A q^{ext(A,A)}.
  mpz_class tilde_aut(ClassId A) const;

  /// Basis change u_M -> v^{-<M,M>} a_M mu_M; an algebra isomorphism from
  /// the u-presentation onto the mu-presentation.
  DH1Element phi(const DH1Element& x) const;

  bool phi_check(ClassId A, ClassId B) const;

  const DH1Element& basis_product_u(ClassId a, ClassId b) const;

 private:
  const Catalog& cat_;
  DerivedKernel dk_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<ClassId, ClassId>, DH1Element> uprod_memo_;
  mutable std::map<std::pair<ClassId, ClassId>, GTable> g_memo_;
};

}  // namespace hallforge

#endif
