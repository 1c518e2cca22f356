#ifndef HALLFORGE_QUIVER_HPP
#define HALLFORGE_QUIVER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hallforge {

/// A class in the Grothendieck group, coordinates over the simples.
/// Nonnegative when it is the dimension vector of a representation,
/// arbitrary sign for the K-element indices.
using DimVector = std::vector<int>;

DimVector dim_zero(int n);
DimVector dim_add(const DimVector& a, const DimVector& b);
DimVector dim_sub(const DimVector& a, const DimVector& b);
bool dim_leq(const DimVector& a, const DimVector& b);  // componentwise
bool dim_nonneg(const DimVector& a);
bool dim_is_zero(const DimVector& a);
std::string dim_to_string(const DimVector& a);

/// A linearly ordered quiver of type A_n: vertices 1..n, exactly one arrow
/// between consecutive vertices, arbitrary orientation.
class Quiver {
 public:
  struct Arrow {
    int src, tgt;  // 1-based vertex indices
  };

  /// Grammar: "a<n>" or "a<n>:<dirs>" with dirs in {>,<}^{n-1}.
  /// '>' puts the arrow i -> i+1, '<' puts it i+1 -> i.
  /// Omitted dirs default to all '>'.
  static Quiver parse(std::string_view spec);

  int n() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// +1 if every arrow points i -> i+1, -1 if every arrow points i+1 -> i,
  /// 0 for mixed orientation. n <= 2 is always equioriented.
  int orientation() const;

  std::string text() const;

  bool operator==(const Quiver& rhs) const = default;

 private:
  Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {}
  int n_ = 1;
  std::vector<Arrow> arrows_;
};

/// Euler form <d, e> = sum_i d_i e_i - sum_{a: s->t} d_s e_t.
/// For representations M, N with these classes it equals
/// dim Hom(M, N) - dim Ext^1(M, N).
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// (d, e) = <d, e> + <e, d>.
long long symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace hallforge

#endif
