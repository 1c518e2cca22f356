#ifndef HALLFORGE_HALL_DERIVED_HPP
#define HALLFORGE_HALL_DERIVED_HPP

#include <map>
#include <mutex>
#include <tuple>

#include <gmpxx.h>

#include "hallforge/hall_classical.hpp"
#include "hallforge/rep.hpp"

namespace hallforge {

/// An object M[-1] + M0 + M1[1] of the bounded derived category, shift
/// degrees restricted to the window {-1, 0, 1}. Absent degrees are the zero
/// class.
struct ShiftedSum {
  ClassId deg_m1 = 0;  // degree -1 part
  ClassId deg_0 = 0;
  ClassId deg_p1 = 0;  // degree +1 part
};

/// Structure constants of the derived Hall algebra, obtained from classical
/// submodule counts through the hereditary reductions rather than by
/// counting morphisms with a fixed cone. Every value is exact.
class DerivedKernel {
 public:
  explicit DerivedKernel(const Catalog& cat) : cat_(cat) {}

  const Catalog& cat() const { return cat_; }
  std::uint32_t q() const { return cat_.field().p(); }

  /// { X, Y } = prod_{i>0} |Hom(X[i], Y)|^((-1)^i). Heredity leaves only
  /// hom and single-extension counts between window parts.
  mpq_class curly(const ShiftedSum& x, const ShiftedSum& y) const;

  /// Automorphism count of a shifted sum; strictly upper-triangular
  /// morphisms between adjacent degrees contribute a full power of q.
  mpz_class aut_shifted(const ShiftedSum& x) const;

  /// Exponent e with mu_{M[i]} mu_{N[j]} = q^e mu_{N[j]} mu_{M[i]}, i-j > 1.
  long long shift_commute_exponent(int i, int j, ClassId M, ClassId N) const;

  /// F^{X[1]+Y}_{M[1],N} = F^{X+Y[-1]}_{M,N[-1]}
  ///   = q^{-<Y,X>} (a_X a_Y / a_M a_N) sum_L a_L g^M_{L,X} g^N_{Y,L}.
  mpq_class f_one_shift(ClassId M, ClassId N, ClassId X, ClassId Y) const;

  struct FQuad {
    mpq_class f4;  // F^M_{M1, L2[-1], N1[1], M2}
    mpq_class f2;  // F^M_{M1+N1[1], L2[-1]+M2} = q^{<L2,N1>} f4
  };
  FQuad f_quad(ClassId M1, ClassId L2, ClassId N1, ClassId M2, ClassId M) const;

  /// H^M_{M1 + N1[1], L2[-1] + M2} in u-normalization.
  mpq_class h_mixed(ClassId M1, ClassId N1, ClassId L2, ClassId M2, ClassId M) const;

  /// The same for every target M at once; memoized. Keys with zero value are
  /// absent.
  using HTable = std::map<ClassId, mpq_class>;
  const HTable& h_mixed_all(ClassId M1, ClassId N1, ClassId L2, ClassId M2) const;

  /// Full window-3 structure constant
  /// F^{L[-1]+M+N[1]}_{L1[-1]+M1+N1[1], L2[-1]+M2+N2[1]}.
  mpq_class f_window3(ClassId L1, ClassId M1, ClassId N1, ClassId L2, ClassId M2, ClassId N2,
                      ClassId L, ClassId M, ClassId N) const;

 private:
  const Catalog& cat_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<ClassId, ClassId, ClassId, ClassId>, HTable> h_memo_;
};

}  // namespace hallforge

#endif
