#ifndef HALLFORGE_EXPR_HPP
#define HALLFORGE_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hallforge/coeff.hpp"
#include "hallforge/dh1.hpp"
#include "hallforge/dh2.hpp"
#include "hallforge/hall_classical.hpp"

namespace hallforge {

/// One multiplicand of an element term.
struct ExprFactor {
  enum Kind { kK, kKs, kU } kind = kU;
  DimVector ints;        // K / Ks index
  IsoClass m0, m1;       // u parts; m1 only with the two-slot form
  bool has_m1 = false;
};

struct ExprTerm {
  Coeff coeff;  // defaults to 1
  std::vector<ExprFactor> factors;
};

/// Parsed element: a sum of terms, each an optional coefficient times an
/// ordered product of K / Ks / u factors.
///
/// Grammar:  element := term ('+' term)*
///           term    := coeff | [coeff '*'] factor+
///           coeff   := '(' rat [',' rat] ')'
///           factor  := 'K[' ints ']' | 'Ks[' ints ']' | 'u[' iso [';' iso] ']'
/// Whitespace and '*' between factors are accepted and ignored.
struct ElementExpr {
  std::vector<ExprTerm> terms;
};

ElementExpr parse_element(std::string_view text, std::uint32_t q);

/// Evaluations multiply the factors left to right in the target algebra.
/// Factors a given algebra does not have are rejected.
RHElement eval_rh(const RingelHall& alg, const ElementExpr& e);
DH2Element eval_dh2(const DH2& alg, const ElementExpr& e);
DH1Element eval_dh1(const DH1& alg, const ElementExpr& e);

/// Canonical text forms: terms sorted by key, unit coefficient omitted,
/// the empty element printed as "0".
std::string to_text(const Catalog& cat, const RHElement& x);
std::string to_text(const Catalog& cat, const DH2Element& x);
std::string to_text(const Catalog& cat, const DH2Reduced& x);
std::string to_text(const Catalog& cat, const DH1Element& x);

std::string int_list_to_string(const DimVector& v);

}  // namespace hallforge

#endif
