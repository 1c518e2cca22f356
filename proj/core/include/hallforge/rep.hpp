#ifndef HALLFORGE_REP_HPP
#define HALLFORGE_REP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hallforge/fp.hpp"
#include "hallforge/quiver.hpp"

namespace hallforge {

/// The interval module M[lo,hi]: one-dimensional at every vertex in
/// [lo, hi], identity maps on the arrows inside the interval, zero outside.
/// These are exactly the indecomposables of a type-A quiver.
struct Interval {
  int lo = 1, hi = 1;
  auto operator<=>(const Interval&) const = default;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// An isomorphism class: a multiset of intervals, kept sorted so equality
/// is bit-exact.
class IsoClass {
 public:
  IsoClass() = default;
  explicit IsoClass(std::vector<std::pair<Interval, int>> parts);

  const std::vector<std::pair<Interval, int>>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  DimVector dim_vector(int n) const;

  /// Literal grammar: `0` or `(lo-hi)xM` joined by `+`.
  static IsoClass parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const IsoClass&) const = default;

 private:
  std::vector<std::pair<Interval, int>> parts_;
};

/// A concrete representation: one matrix per arrow; the matrix of an arrow
/// s -> t has shape dim_t x dim_s.
struct Representation {
  const Quiver* quiver = nullptr;
  PrimeField field{2};
  DimVector dim;
  std::vector<FMatrix> mats;  // parallel to quiver->arrows()

  bool is_zero_rep() const { return dim_is_zero(dim); }
};

/// Block-diagonal direct sum of interval modules, deterministic layout:
/// intervals sorted, multiplicity blocks contiguous.
Representation realize(const Quiver& q, PrimeField f, const IsoClass& c);

/// Basis of the intertwiner space { f : N_a f_s = f_t M_a for all arrows },
/// one matrix tuple per basis element.
std::vector<std::vector<FMatrix>> hom_basis(const Representation& M, const Representation& N);
std::uint32_t hom_dim(const Representation& M, const Representation& N);

/// dim Ext^1(M,N) = hom_dim(M,N) - <M,N>; heredity makes this exact.
std::uint32_t ext1_dim(const Representation& M, const Representation& N);

/// Brute-force |Aut M|: scans the whole endomorphism algebra.
std::uint64_t aut_count_brute(const Representation& M, std::uint64_t limit = kDefaultEnumLimit);

/// One subrepresentation of L: the subspace tuple together with the induced
/// sub- and quotient representation (quotient taken in the fixed complement
/// basis extending the rref basis of each subspace).
struct Subrep {
  std::vector<Subspace> spaces;
  Representation sub;
  Representation quot;
};

/// Every arrow-compatible tuple of subspaces of L.
std::vector<Subrep> subreps(const Representation& L, std::uint64_t limit = kDefaultEnumLimit);

/// Sub/quotient pair induced by a fixed subspace tuple, or nothing when some
/// arrow does not map the tuple into itself.
std::optional<std::pair<Representation, Representation>> induced_sub_quot(
    const Representation& L, const std::vector<Subspace>& spaces);

using ClassId = std::uint32_t;

/// How to recover the interval multiset of a concrete representation.
enum class ClassifyMethod {
  kAuto,      // rank invariants when equioriented, hom counts otherwise
  kRank,      // inclusion-exclusion on ranks of composite arrow maps
  kHomCount,  // solve for multiplicities from hom dimensions out of intervals
  kScan,      // search candidates, exhibit an invertible hom member
};

/// The finite table of all isomorphism classes with dimension vector below a
/// bound, with cached automorphism counts, hom/ext dimensions, sub/quotient
/// class lists, submodule counts and extension-middle distributions.
///
/// Construction is a single-owner build phase; afterwards reads are safe from
/// any thread (the lazy caches synchronize internally).
class Catalog {
 public:
  Catalog(Quiver q, PrimeField f, DimVector dmax, std::uint64_t limit = kDefaultEnumLimit);

  const Quiver& quiver() const { return quiver_; }
  PrimeField field() const { return field_; }
  const DimVector& dmax() const { return dmax_; }
  std::uint64_t limit() const { return limit_; }

  std::size_t size() const { return classes_.size(); }
  const IsoClass& cls(ClassId id) const { return classes_[id]; }
  const DimVector& dim(ClassId id) const { return dims_[id]; }
  const mpz_class& aut(ClassId id) const { return auts_[id]; }
  ClassId zero_id() const { return 0; }

  std::optional<ClassId> id_of(const IsoClass& c) const;
  /// Throws out_of_catalog_error when the class is not in the table.
  ClassId require_id(const IsoClass& c) const;

  /// All ids with the exact dimension vector (empty when some coordinate is
  /// negative); throws out_of_catalog_error when the vector escapes the bound.
  const std::vector<ClassId>& ids_with_dim(const DimVector& d) const;

  std::uint32_t hom(ClassId a, ClassId b) const;
  std::uint32_t ext1(ClassId a, ClassId b) const;
  long long euler(ClassId a, ClassId b) const { return euler_form(quiver_, dims_[a], dims_[b]); }
  long long euler(const DimVector& a, const DimVector& b) const { return euler_form(quiver_, a, b); }
  long long sym(const DimVector& a, const DimVector& b) const { return symmetric_form(quiver_, a, b); }

  const Representation& realize_class(ClassId id) const;

  /// Interval multiset of a concrete representation with dim <= dmax.
  ClassId classify(const Representation& r, ClassifyMethod m = ClassifyMethod::kAuto) const;

  /// Classes of subobjects / quotient objects of the given class.
  const std::vector<ClassId>& sub_classes(ClassId id) const;
  const std::vector<ClassId>& quot_classes(ClassId id) const;

  /// Submodule counts of realize(L) sliced by subobject dimension vector:
  /// maps (quotient class, sub class) to the number of such submodules.
  using GSlice = std::map<std::pair<ClassId, ClassId>, mpz_class>;
  const GSlice& g_slice(ClassId L, const DimVector& sub_dim) const;

  /// |Ext^1(M,N)_L| for every middle class L at once: enumerates one
  /// representative per extension class and sorts them by middle term.
  using ExtTable = std::map<ClassId, mpz_class>;
  const ExtTable& ext_table(ClassId M, ClassId N) const;

  /// Number of interval modules of the quiver.
  std::size_t interval_count() const { return intervals_.size(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::uint32_t interval_hom(std::size_t i, std::size_t j) const {
    return hom_ij_[i * intervals_.size() + j];
  }

 private:
  std::uint32_t hom_from_mults(ClassId a, ClassId b) const;
  void ensure_full_slices(ClassId id) const;
  std::vector<int> rank_multiplicities(const Representation& r) const;
  std::vector<int> homcount_multiplicities(const Representation& r) const;
  std::vector<int> scan_multiplicities(const Representation& r) const;
  ClassId class_from_multiplicities(const std::vector<int>& mult) const;

  Quiver quiver_;
  PrimeField field_;
  DimVector dmax_;
  std::uint64_t limit_;

  std::vector<Interval> intervals_;
  std::vector<Representation> interval_reps_;
  std::vector<std::uint32_t> hom_ij_;           // interval-to-interval hom dims
  std::vector<std::vector<mpq_class>> hom_inv_;  // inverse of hom_ij_, column solve
  bool homcount_ok_ = false;

  std::vector<IsoClass> classes_;
  std::vector<std::vector<int>> mults_;  // class -> interval multiplicities
  std::vector<DimVector> dims_;
  std::vector<mpz_class> auts_;
  std::map<IsoClass, ClassId> index_;
  std::map<DimVector, std::vector<ClassId>> by_dim_;
  std::vector<std::uint32_t> hom_cls_;  // dense class-pair hom dims

  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Representation>> realized_;
  mutable std::map<std::pair<ClassId, DimVector>, GSlice> g_slices_;
  mutable std::vector<char> slices_complete_;
  mutable std::vector<std::vector<ClassId>> subs_, quots_;
  mutable std::map<std::pair<ClassId, ClassId>, ExtTable> ext_tables_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Subspace>> subspace_cache_;

  const std::vector<Subspace>& cached_subspaces(std::uint32_t n, std::uint32_t d) const;
};

/// Closed-form |Aut M| for M = (+) X_i^{m_i}: p^(dimEnd - sum m_i^2) * prod |GL_{m_i}|.
mpz_class aut_count_closed(const Catalog& cat, ClassId id);

}  // namespace hallforge

#endif
