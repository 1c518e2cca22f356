#include "hallforge/quiver.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallforge/errors.hpp"

namespace hallforge {

DimVector dim_zero(int n) { return DimVector(n, 0); }

DimVector dim_add(const DimVector& a, const DimVector& b) {
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool dim_leq(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dim_nonneg(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool dim_is_zero(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string dim_to_string(const DimVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

Quiver Quiver::parse(std::string_view spec) {
  std::size_t pos = 0;
  if (spec.empty() || spec[0] != 'a') throw parse_error("quiver spec must start with 'a'", 0);
  pos = 1;
  std::size_t digits = 0;
  long n = 0;
  while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') {
    n = n * 10 + (spec[pos] - '0');
    if (n > 64) throw parse_error("quiver too large", pos);
    ++pos;
    ++digits;
  }
  if (digits == 0) throw parse_error("expected vertex count after 'a'", pos);
  if (n < 1) throw parse_error("quiver needs at least one vertex", 1);

  std::string dirs(static_cast<std::size_t>(n - 1), '>');
  if (pos < spec.size()) {
    if (spec[pos] != ':') throw parse_error("expected ':' before orientation", pos);
    ++pos;
    std::string_view tail = spec.substr(pos);
    if (tail.size() != static_cast<std::size_t>(n - 1))
      throw parse_error("orientation must have exactly n-1 characters", pos);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (tail[i] != '>' && tail[i] != '<')
        throw parse_error("orientation characters must be '>' or '<'", pos + i);
      dirs[i] = tail[i];
    }
  }

  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) {
    if (dirs[static_cast<std::size_t>(i - 1)] == '>')
      arrows.push_back({i, i + 1});
    else
      arrows.push_back({i + 1, i});
  }
  return Quiver(static_cast<int>(n), std::move(arrows));
}

int Quiver::orientation() const {
  bool fwd = true, bwd = true;
  for (const auto& a : arrows_) {
    if (a.tgt != a.src + 1) fwd = false;
    if (a.src != a.tgt + 1) bwd = false;
  }
  if (fwd) return +1;
  if (bwd) return -1;
  return 0;
}

std::string Quiver::text() const {
  std::string s = "a" + std::to_string(n_);
  if (n_ > 1) {
    s += ":";
    for (const auto& a : arrows_) s += (a.tgt == a.src + 1) ? '>' : '<';
  }
  return s;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (static_cast<int>(d.size()) != q.n() || static_cast<int>(e.size()) != q.n())
    throw std::invalid_argument("dimension vector length does not match quiver");
  long long acc = 0;
  for (int i = 0; i < q.n(); ++i) acc += static_cast<long long>(d[i]) * e[i];
  for (const auto& a : q.arrows())
    acc -= static_cast<long long>(d[a.src - 1]) * e[a.tgt - 1];
  return acc;
}

long long symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

}  // namespace hallforge
