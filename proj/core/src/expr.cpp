#include "hallforge/expr.hpp"

#include <cctype>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

long long parse_ll(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  std::size_t digits = 0;
  long long value = 0;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    value = value * 10 + (c.s[c.pos] - '0');
    ++c.pos;
    ++digits;
  }
  if (digits == 0) throw parse_error("expected integer", start);
  if (start < c.s.size() && c.s[start] == '-') value = -value;
  return value;
}

mpq_class parse_rat(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  while (c.pos < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/'))
    ++c.pos;
  std::string text(c.s.substr(start, c.pos - start));
  if (text.empty()) throw parse_error("expected rational", start);
  try {
    mpq_class v(text);
    v.canonicalize();
    return v;
  } catch (const std::exception&) {
    throw parse_error("malformed rational '" + text + "'", start);
  }
}

DimVector parse_int_list(Cursor& c) {
  DimVector out;
  c.expect('[');
  if (!c.accept(']')) {
    for (;;) {
      out.push_back(static_cast<int>(parse_ll(c)));
      if (c.accept(']')) break;
      c.expect(',');
    }
  }
  return out;
}

IsoClass parse_iso(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  std::size_t depth = 0;
  while (c.pos < c.s.size()) {
    char ch = c.s[c.pos];
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (depth == 0) break;
      --depth;
    }
    if (depth == 0 && (ch == ';' || ch == ']')) break;
    ++c.pos;
  }
  std::string lit(c.s.substr(start, c.pos - start));
  // trim
  while (!lit.empty() && std::isspace(static_cast<unsigned char>(lit.back()))) lit.pop_back();
  try {
    return IsoClass::parse(lit);
  } catch (const parse_error& e) {
    throw parse_error(std::string("bad iso-class literal: ") + e.what(), start + e.pos);
  }
}

ExprFactor parse_factor(Cursor& c) {
  ExprFactor f;
  if (c.accept_word("Ks")) {
    f.kind = ExprFactor::kKs;
    f.ints = parse_int_list(c);
    return f;
  }
  if (c.accept_word("K")) {
    f.kind = ExprFactor::kK;
    f.ints = parse_int_list(c);
    return f;
  }
  if (c.accept_word("u")) {
    f.kind = ExprFactor::kU;
    c.expect('[');
    f.m0 = parse_iso(c);
    if (c.accept(';')) {
      f.m1 = parse_iso(c);
      f.has_m1 = true;
    }
    c.expect(']');
    return f;
  }
  throw parse_error("expected factor K[...], Ks[...] or u[...]", c.pos);
}

}  // namespace

ElementExpr parse_element(std::string_view text, std::uint32_t q) {
  Cursor c{text};
  ElementExpr e;
  if (c.eof()) throw parse_error("empty element", 0);
  for (;;) {
    ExprTerm term;
    term.coeff = Coeff::one(q);
    bool had_coeff = false;
    if (c.peek() == '(') {
      c.expect('(');
      mpq_class a = parse_rat(c);
      mpq_class b = 0;
      if (c.accept(',')) b = parse_rat(c);
      c.expect(')');
      term.coeff = Coeff(q, std::move(a), std::move(b));
      had_coeff = true;
      c.accept('*');
    }
    while (!c.eof() && c.peek() != '+') {
      term.factors.push_back(parse_factor(c));
      c.accept('*');
    }
    if (term.factors.empty() && !had_coeff) throw parse_error("empty term", c.pos);
    e.terms.push_back(std::move(term));
    if (c.eof()) break;
    c.expect('+');
  }
  return e;
}

namespace {

void check_length(const DimVector& v, int n, const char* what) {
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument(std::string(what) + " index length does not match the quiver");
}

}  // namespace

RHElement eval_rh(const RingelHall& alg, const ElementExpr& e) {
  const Catalog& cat = alg.cat();
  const int n = cat.quiver().n();
  RHElement out;
  for (const auto& term : e.terms) {
    RHElement acc = alg.unit();
    for (const auto& f : term.factors) {
      RHElement fac;
      switch (f.kind) {
        case ExprFactor::kK:
          check_length(f.ints, n, "K");
          fac = alg.monomial(cat.zero_id(), f.ints, Coeff::one(alg.q()));
          break;
        case ExprFactor::kKs:
          throw std::invalid_argument("this algebra has no Ks elements");
        case ExprFactor::kU:
          if (f.has_m1)
            throw std::invalid_argument("this algebra has no degree-one parts in u[...]");
          fac = alg.monomial(cat.require_id(f.m0), dim_zero(n), Coeff::one(alg.q()));
          break;
      }
      acc = alg.product(acc, fac);
    }
    for (auto& [key, c] : acc) {
      Coeff v = c * term.coeff;
      auto it = out.find(key);
      if (it == out.end()) {
        if (!v.is_zero()) out.emplace(key, std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

DH2Element eval_dh2(const DH2& alg, const ElementExpr& e) {
  const Catalog& cat = alg.cat();
  const int n = cat.quiver().n();
  DimVector z = dim_zero(n);
  DH2Element out;
  for (const auto& term : e.terms) {
    DH2Element acc = alg.unit();
    for (const auto& f : term.factors) {
      DH2Key key{z, z, cat.zero_id(), cat.zero_id()};
      switch (f.kind) {
        case ExprFactor::kK:
          check_length(f.ints, n, "K");
          key.k = f.ints;
          break;
        case ExprFactor::kKs:
          check_length(f.ints, n, "Ks");
          key.ks = f.ints;
          break;
        case ExprFactor::kU:
          key.m0 = cat.require_id(f.m0);
          key.m1 = f.has_m1 ? cat.require_id(f.m1) : cat.zero_id();
          break;
      }
      acc = alg.product(acc, alg.monomial(std::move(key), Coeff::one(alg.q())));
    }
    for (auto& [key, c] : acc) {
      Coeff v = c * term.coeff;
      auto it = out.find(key);
      if (it == out.end()) {
        if (!v.is_zero()) out.emplace(key, std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

DH1Element eval_dh1(const DH1& alg, const ElementExpr& e) {
  const Catalog& cat = alg.cat();
  DH1Element out;
  for (const auto& term : e.terms) {
    DH1Element acc = alg.unit();
    for (const auto& f : term.factors) {
      if (f.kind != ExprFactor::kU)
        throw std::invalid_argument("this algebra has only u[...] generators");
      if (f.has_m1)
        throw std::invalid_argument("this algebra has no degree-one parts in u[...]");
      acc = alg.product_u(acc, alg.monomial(cat.require_id(f.m0), Coeff::one(alg.q())));
    }
    for (auto& [key, c] : acc) {
      Coeff v = c * term.coeff;
      auto it = out.find(key);
      if (it == out.end()) {
        if (!v.is_zero()) out.emplace(key, std::move(v));
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

std::string int_list_to_string(const DimVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

namespace {

std::string join_term(const Coeff& c, std::vector<std::string> factors) {
  if (factors.empty()) factors.push_back("u[0]");
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) body += "*";
    body += factors[i];
  }
  if (c == Coeff::one(c.q())) return body;
  return "(" + c.rat().get_str() + "," + c.srt().get_str() + ")*" + body;
}

}  // namespace

std::string to_text(const Catalog& cat, const RHElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    std::vector<std::string> fs;
    if (key.m != cat.zero_id()) fs.push_back("u[" + cat.cls(key.m).to_string() + "]");
    if (!dim_is_zero(key.k)) fs.push_back("K[" + int_list_to_string(key.k) + "]");
    if (!out.empty()) out += " + ";
    out += join_term(c, std::move(fs));
  }
  return out;
}

std::string to_text(const Catalog& cat, const DH2Element& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    std::vector<std::string> fs;
    if (!dim_is_zero(key.k)) fs.push_back("K[" + int_list_to_string(key.k) + "]");
    if (!dim_is_zero(key.ks)) fs.push_back("Ks[" + int_list_to_string(key.ks) + "]");
    if (key.m0 != cat.zero_id() || key.m1 != cat.zero_id())
      fs.push_back("u[" + cat.cls(key.m0).to_string() + ";" + cat.cls(key.m1).to_string() + "]");
    if (!out.empty()) out += " + ";
    out += join_term(c, std::move(fs));
  }
  return out;
}

std::string to_text(const Catalog& cat, const DH2Reduced& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : x) {
    std::vector<std::string> fs;
    if (!dim_is_zero(key.gamma)) fs.push_back("K[" + int_list_to_string(key.gamma) + "]");
    if (key.m0 != cat.zero_id() || key.m1 != cat.zero_id())
      fs.push_back("u[" + cat.cls(key.m0).to_string() + ";" + cat.cls(key.m1).to_string() + "]");
    if (!out.empty()) out += " + ";
    out += join_term(c, std::move(fs));
  }
  return out;
}

std::string to_text(const Catalog& cat, const DH1Element& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : x) {
    std::vector<std::string> fs;
    if (m != cat.zero_id()) fs.push_back("u[" + cat.cls(m).to_string() + "]");
    if (!out.empty()) out += " + ";
    out += join_term(c, std::move(fs));
  }
  return out;
}

}  // namespace hallforge
