#include "hallforge/rep.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>

#include "hallforge/errors.hpp"

namespace hallforge {

IsoClass::IsoClass(std::vector<std::pair<Interval, int>> parts) {
  std::map<Interval, int> merged;
  for (auto& [iv, m] : parts) {
    if (iv.lo > iv.hi || iv.lo < 1) throw std::invalid_argument("bad interval");
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    if (m > 0) merged[iv] += m;
  }
  parts_.assign(merged.begin(), merged.end());
}

DimVector IsoClass::dim_vector(int n) const {
  DimVector d(n, 0);
  for (const auto& [iv, m] : parts_)
    for (int v = iv.lo; v <= iv.hi; ++v) {
      if (v > n) throw std::invalid_argument("interval exceeds quiver");
      d[v - 1] += m;
    }
  return d;
}

namespace {

int parse_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  int value = 0;
  auto res = std::from_chars(s.data() + start, s.data() + pos, value);
  if (res.ec != std::errc() || res.ptr != s.data() + pos || pos == start)
    throw parse_error("expected integer", start);
  return value;
}

void expect(std::string_view s, std::size_t& pos, char c) {
  if (pos >= s.size() || s[pos] != c)
    throw parse_error(std::string("expected '") + c + "'", pos);
  ++pos;
}

}  // namespace

IsoClass IsoClass::parse(std::string_view text) {
  std::size_t pos = 0;
  if (text == "0") return IsoClass();
  std::vector<std::pair<Interval, int>> parts;
  for (;;) {
    expect(text, pos, '(');
    int lo = parse_int(text, pos);
    expect(text, pos, '-');
    int hi = parse_int(text, pos);
    expect(text, pos, ')');
    expect(text, pos, 'x');
    int mult = parse_int(text, pos);
    if (lo < 1 || hi < lo) throw parse_error("bad interval bounds", pos);
    if (mult < 1) throw parse_error("multiplicity must be positive", pos);
    parts.push_back({Interval{lo, hi}, mult});
    if (pos == text.size()) break;
    expect(text, pos, '+');
  }
  return IsoClass(std::move(parts));
}

std::string IsoClass::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += "+";
    s += "(" + std::to_string(parts_[i].first.lo) + "-" +
         std::to_string(parts_[i].first.hi) + ")x" + std::to_string(parts_[i].second);
  }
  return s;
}

Representation realize(const Quiver& q, PrimeField f, const IsoClass& c) {
  Representation r;
  r.quiver = &q;
  r.field = f;
  r.dim = c.dim_vector(q.n());

  // basis at vertex v: one vector per (interval copy) containing v, in
  // sorted interval order with copies contiguous
  std::vector<std::vector<std::pair<std::size_t, int>>> basis_of(q.n());
  std::size_t part_idx = 0;
  for (const auto& [iv, m] : c.parts()) {
    for (int copy = 0; copy < m; ++copy)
      for (int v = iv.lo; v <= iv.hi; ++v)
        basis_of[v - 1].push_back({part_idx, copy});
    ++part_idx;
  }

  for (const auto& a : q.arrows()) {
    const auto& src_basis = basis_of[a.src - 1];
    const auto& tgt_basis = basis_of[a.tgt - 1];
    FMatrix m(static_cast<std::uint32_t>(tgt_basis.size()),
              static_cast<std::uint32_t>(src_basis.size()), f);
    for (std::uint32_t cs = 0; cs < src_basis.size(); ++cs)
      for (std::uint32_t rt = 0; rt < tgt_basis.size(); ++rt)
        if (src_basis[cs] == tgt_basis[rt]) m.at(rt, cs) = 1;
    r.mats.push_back(std::move(m));
  }
  return r;
}

namespace {

struct HomSystem {
  FMatrix system;                 // rows: equations, cols: flattened variables
  std::vector<std::size_t> var_off;  // per-vertex offset into the variables
};

HomSystem hom_system(const Representation& M, const Representation& N) {
  const Quiver& q = *M.quiver;
  PrimeField f = M.field;
  std::vector<std::size_t> off(q.n() + 1, 0);
  for (int i = 0; i < q.n(); ++i)
    off[i + 1] = off[i] + std::size_t(N.dim[i]) * M.dim[i];
  std::size_t total_vars = off[q.n()];

  std::size_t total_eqs = 0;
  for (const auto& a : q.arrows())
    total_eqs += std::size_t(N.dim[a.tgt - 1]) * M.dim[a.src - 1];

  FMatrix sys(static_cast<std::uint32_t>(total_eqs), static_cast<std::uint32_t>(total_vars), f);
  std::size_t eq = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int s = a.src - 1, t = a.tgt - 1;
    const FMatrix& Ma = M.mats[ai];
    const FMatrix& Na = N.mats[ai];
    // equation (r, c): sum_k Na[r,k] f_s[k,c] - sum_k f_t[r,k] Ma[k,c] = 0
    for (int r = 0; r < N.dim[t]; ++r)
      for (int c = 0; c < M.dim[s]; ++c) {
        for (int k = 0; k < N.dim[s]; ++k) {
          std::size_t var = off[s] + std::size_t(k) * M.dim[s] + c;
          sys.at(static_cast<std::uint32_t>(eq), static_cast<std::uint32_t>(var)) =
              f.add(sys.at(static_cast<std::uint32_t>(eq), static_cast<std::uint32_t>(var)),
                    Na.at(r, k));
        }
        for (int k = 0; k < M.dim[t]; ++k) {
          std::size_t var = off[t] + std::size_t(r) * M.dim[t] + k;
          sys.at(static_cast<std::uint32_t>(eq), static_cast<std::uint32_t>(var)) =
              f.sub(sys.at(static_cast<std::uint32_t>(eq), static_cast<std::uint32_t>(var)),
                    Ma.at(k, c));
        }
        ++eq;
      }
  }
  return {std::move(sys), std::move(off)};
}

}  // namespace

std::vector<std::vector<FMatrix>> hom_basis(const Representation& M, const Representation& N) {
  const Quiver& q = *M.quiver;
  auto [sys, off] = hom_system(M, N);
  auto null_vecs = nullspace_basis(sys);
  std::vector<std::vector<FMatrix>> basis;
  basis.reserve(null_vecs.size());
  for (const auto& v : null_vecs) {
    std::vector<FMatrix> tuple;
    for (int i = 0; i < q.n(); ++i) {
      FMatrix fi(static_cast<std::uint32_t>(N.dim[i]), static_cast<std::uint32_t>(M.dim[i]),
                 M.field);
      for (int r = 0; r < N.dim[i]; ++r)
        for (int c = 0; c < M.dim[i]; ++c)
          fi.at(r, c) = v[off[i] + std::size_t(r) * M.dim[i] + c];
      tuple.push_back(std::move(fi));
    }
    basis.push_back(std::move(tuple));
  }
  return basis;
}

std::uint32_t hom_dim(const Representation& M, const Representation& N) {
  auto [sys, off] = hom_system(M, N);
  return sys.cols() - rank(sys);
}

std::uint32_t ext1_dim(const Representation& M, const Representation& N) {
  long long e = static_cast<long long>(hom_dim(M, N)) - euler_form(*M.quiver, M.dim, N.dim);
  if (e < 0) throw internal_error("negative ext dimension");
  return static_cast<std::uint32_t>(e);
}

std::uint64_t aut_count_brute(const Representation& M, std::uint64_t limit) {
  auto basis = hom_basis(M, M);
  std::uint32_t total = 0;
  for (int d : M.dim) total += d;
  std::vector<FMatrix> block_basis;
  for (const auto& tuple : basis) {
    FMatrix b(total, total, M.field);
    std::uint32_t at = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::uint32_t r = 0; r < tuple[i].rows(); ++r)
        for (std::uint32_t c = 0; c < tuple[i].cols(); ++c)
          b.at(at + r, at + c) = tuple[i].at(r, c);
      at += tuple[i].rows();
    }
    block_basis.push_back(std::move(b));
  }
  return count_units(block_basis, limit);
}

namespace {

// coordinates of v in the rref basis; returns false when v is not a member
bool reduce_by(const Subspace& u, std::vector<std::uint32_t>& v, PrimeField f,
               std::vector<std::uint32_t>* coords) {
  auto pivots = u.pivot_cols();
  for (std::uint32_t r = 0; r < u.basis.rows(); ++r) {
    std::uint32_t coef = v[pivots[r]];
    if (coords) (*coords)[r] = coef;
    if (coef) {
      for (std::uint32_t c = 0; c < u.ambient_dim; ++c)
        v[c] = f.sub(v[c], f.mul(coef, u.basis.at(r, c)));
    }
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::uint32_t> complement_cols(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim, false);
  for (auto c : u.pivot_cols()) is_pivot[c] = true;
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < u.ambient_dim; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

}  // namespace

std::optional<std::pair<Representation, Representation>> induced_sub_quot(
    const Representation& L, const std::vector<Subspace>& spaces) {
  const Quiver& q = *L.quiver;
  PrimeField f = L.field;

  Representation sub, quot;
  sub.quiver = quot.quiver = &q;
  sub.field = quot.field = f;
  sub.dim.resize(q.n());
  quot.dim.resize(q.n());
  for (int i = 0; i < q.n(); ++i) {
    sub.dim[i] = static_cast<int>(spaces[i].dim());
    quot.dim[i] = L.dim[i] - sub.dim[i];
  }

  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int s = a.src - 1, t = a.tgt - 1;
    const Subspace& us = spaces[s];
    const Subspace& ut = spaces[t];
    const FMatrix& Ma = L.mats[ai];

    FMatrix smat(static_cast<std::uint32_t>(sub.dim[t]), static_cast<std::uint32_t>(sub.dim[s]), f);
    for (std::uint32_t bs = 0; bs < us.basis.rows(); ++bs) {
      std::vector<std::uint32_t> vec(us.ambient_dim);
      for (std::uint32_t c = 0; c < us.ambient_dim; ++c) vec[c] = us.basis.at(bs, c);
      auto img = Ma.apply(vec);
      std::vector<std::uint32_t> coords(ut.basis.rows(), 0);
      if (!reduce_by(ut, img, f, &coords)) return std::nullopt;  // arrow leaves the tuple
      for (std::uint32_t r = 0; r < coords.size(); ++r) smat.at(r, bs) = coords[r];
    }
    sub.mats.push_back(std::move(smat));

    auto comp_s = complement_cols(us);
    auto comp_t = complement_cols(ut);
    FMatrix qmat(static_cast<std::uint32_t>(quot.dim[t]), static_cast<std::uint32_t>(quot.dim[s]),
                 f);
    for (std::uint32_t cs = 0; cs < comp_s.size(); ++cs) {
      std::vector<std::uint32_t> vec(us.ambient_dim, 0);
      vec[comp_s[cs]] = 1;
      auto img = Ma.apply(vec);
      reduce_by(ut, img, f, nullptr);  // residual lives on the complement coordinates
      for (std::uint32_t r = 0; r < comp_t.size(); ++r) qmat.at(r, cs) = img[comp_t[r]];
    }
    quot.mats.push_back(std::move(qmat));
  }
  return std::make_pair(std::move(sub), std::move(quot));
}

std::vector<Subrep> subreps(const Representation& L, std::uint64_t limit) {
  const Quiver& q = *L.quiver;
  std::vector<std::vector<Subspace>> per_vertex;
  mpz_class tuples = 1;
  for (int i = 0; i < q.n(); ++i) {
    per_vertex.push_back(
        enumerate_subspaces(static_cast<std::uint32_t>(L.dim[i]), L.field, limit));
    tuples *= static_cast<unsigned long>(per_vertex.back().size());
  }
  if (tuples > mpz_class(static_cast<unsigned long>(limit)))
    throw resource_limit_error("subrepresentation enumeration over limit");

  std::vector<Subrep> out;
  std::vector<std::size_t> idx(q.n(), 0);
  for (;;) {
    std::vector<Subspace> spaces;
    for (int i = 0; i < q.n(); ++i) spaces.push_back(per_vertex[i][idx[i]]);
    if (auto sq = induced_sub_quot(L, spaces))
      out.push_back(Subrep{std::move(spaces), std::move(sq->first), std::move(sq->second)});
    int k = 0;
    while (k < q.n() && ++idx[k] == per_vertex[k].size()) idx[k++] = 0;
    if (k == q.n()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

Catalog::Catalog(Quiver q, PrimeField f, DimVector dmax, std::uint64_t limit)
    : quiver_(std::move(q)), field_(f), dmax_(std::move(dmax)), limit_(limit) {
  if (static_cast<int>(dmax_.size()) != quiver_.n())
    throw std::invalid_argument("catalog bound length does not match quiver");
  if (!dim_nonneg(dmax_)) throw std::invalid_argument("catalog bound must be nonnegative");

  for (int lo = 1; lo <= quiver_.n(); ++lo)
    for (int hi = lo; hi <= quiver_.n(); ++hi) intervals_.push_back(Interval{lo, hi});
  for (const auto& iv : intervals_)
    interval_reps_.push_back(realize(quiver_, field_, IsoClass({{iv, 1}})));

  const std::size_t k = intervals_.size();
  hom_ij_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      hom_ij_[i * k + j] = hom_dim(interval_reps_[i], interval_reps_[j]);

  // exact inverse of the interval hom matrix, used to read multiplicities
  // off hom counts for mixed orientations
  {
    std::vector<std::vector<mpq_class>> aug(k, std::vector<mpq_class>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) aug[i][j] = static_cast<long>(hom_ij_[i * k + j]);
      aug[i][k + i] = 1;
    }
    homcount_ok_ = true;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
      std::size_t piv = row;
      while (piv < k && aug[piv][col] == 0) ++piv;
      if (piv == k) {
        homcount_ok_ = false;
        break;
      }
      std::swap(aug[piv], aug[row]);
      mpq_class s = aug[row][col];
      for (auto& x : aug[row]) x /= s;
      for (std::size_t i2 = 0; i2 < k; ++i2) {
        if (i2 == row || aug[i2][col] == 0) continue;
        mpq_class t = aug[i2][col];
        for (std::size_t j2 = 0; j2 < 2 * k; ++j2) aug[i2][j2] -= t * aug[row][j2];
      }
      ++row;
    }
    if (row < k) homcount_ok_ = false;
    if (homcount_ok_) {
      hom_inv_.assign(k, std::vector<mpq_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) hom_inv_[i][j] = aug[i][k + j];
    }
  }

  // all interval multisets within the bound, zero class first
  std::vector<int> mult(k, 0);
  DimVector budget = dmax_;
  auto fits = [&](const Interval& iv) {
    for (int v = iv.lo; v <= iv.hi; ++v)
      if (budget[v - 1] == 0) return false;
    return true;
  };
  auto consume = [&](const Interval& iv, int sign) {
    for (int v = iv.lo; v <= iv.hi; ++v) budget[v - 1] += sign;
  };
  auto emit = [&]() {
    if (classes_.size() >= limit_)
      throw resource_limit_error("catalog class enumeration over limit");
    std::vector<std::pair<Interval, int>> parts;
    for (std::size_t i = 0; i < k; ++i)
      if (mult[i]) parts.push_back({intervals_[i], mult[i]});
    classes_.push_back(IsoClass(std::move(parts)));
    mults_.push_back(mult);
  };
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == k) {
      emit();
      return;
    }
    self(self, idx + 1);
    int taken = 0;
    while (fits(intervals_[idx])) {
      consume(intervals_[idx], -1);
      ++mult[idx];
      ++taken;
      self(self, idx + 1);
    }
    mult[idx] = 0;
    while (taken--) consume(intervals_[idx], +1);
  };
  rec(rec, 0);

  for (ClassId id = 0; id < classes_.size(); ++id) {
    dims_.push_back(classes_[id].dim_vector(quiver_.n()));
    index_[classes_[id]] = id;
    by_dim_[dims_.back()].push_back(id);
  }

  // class-level hom dimensions (dense only while that stays small) and
  // closed-form automorphism counts
  const std::size_t C = classes_.size();
  if (C * C <= (std::size_t(1) << 24)) {
    hom_cls_.assign(C * C, 0);
    for (std::size_t a = 0; a < C; ++a)
      for (std::size_t b = 0; b < C; ++b)
        hom_cls_[a * C + b] = hom_from_mults(a, b);
  }
  for (ClassId id = 0; id < C; ++id) auts_.push_back(aut_count_closed(*this, id));

  realized_.resize(C);
  slices_complete_.assign(C, 0);
  subs_.resize(C);
  quots_.resize(C);
}

std::optional<ClassId> Catalog::id_of(const IsoClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassId Catalog::require_id(const IsoClass& c) const {
  auto id = id_of(c);
  if (!id) throw out_of_catalog_error("class " + c.to_string() + " not in catalog");
  return *id;
}

const std::vector<ClassId>& Catalog::ids_with_dim(const DimVector& d) const {
  static const std::vector<ClassId> empty;
  if (!dim_nonneg(d)) return empty;
  if (!dim_leq(d, dmax_))
    throw out_of_catalog_error("dimension vector " + dim_to_string(d) + " beyond catalog bound " +
                               dim_to_string(dmax_));
  auto it = by_dim_.find(d);
  return it == by_dim_.end() ? empty : it->second;
}

std::uint32_t Catalog::hom_from_mults(ClassId a, ClassId b) const {
  const std::size_t k = intervals_.size();
  std::uint32_t h = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!mults_[a][i]) continue;
    for (std::size_t j = 0; j < k; ++j)
      h += static_cast<std::uint32_t>(mults_[a][i]) * mults_[b][j] * hom_ij_[i * k + j];
  }
  return h;
}

std::uint32_t Catalog::hom(ClassId a, ClassId b) const {
  if (!hom_cls_.empty()) return hom_cls_[a * classes_.size() + b];
  return hom_from_mults(a, b);
}

std::uint32_t Catalog::ext1(ClassId a, ClassId b) const {
  long long e = static_cast<long long>(hom(a, b)) - euler(a, b);
  if (e < 0) throw internal_error("negative ext dimension between catalog classes");
  return static_cast<std::uint32_t>(e);
}

const Representation& Catalog::realize_class(ClassId id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (realized_[id]) return *realized_[id];
  }
  auto rep = std::make_unique<Representation>(realize(quiver_, field_, classes_[id]));
  std::lock_guard<std::mutex> lock(mu_);
  if (!realized_[id]) realized_[id] = std::move(rep);
  return *realized_[id];
}

const std::vector<Subspace>& Catalog::cached_subspaces(std::uint32_t n, std::uint32_t d) const {
  auto key = std::make_pair(n, d);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = subspace_cache_.find(key);
    if (it != subspace_cache_.end()) return it->second;
  }
  auto spaces = subspaces_of_dim(n, d, field_, limit_);
  std::lock_guard<std::mutex> lock(mu_);
  return subspace_cache_.try_emplace(key, std::move(spaces)).first->second;
}

std::vector<int> Catalog::rank_multiplicities(const Representation& r) const {
  const int n = quiver_.n();
  const int orient = quiver_.orientation();
  // rank of the composite arrow map across [i, j]; an interval [a, b]
  // contributes exactly when [i, j] sits inside [a, b]
  std::vector<std::vector<std::uint32_t>> rk(n + 2, std::vector<std::uint32_t>(n + 2, 0));
  for (int i = 1; i <= n; ++i) {
    FMatrix comp = FMatrix::identity(static_cast<std::uint32_t>(r.dim[i - 1]), field_);
    rk[i][i] = static_cast<std::uint32_t>(r.dim[i - 1]);
    for (int j = i + 1; j <= n; ++j) {
      // arrow between j-1 and j has index j-2
      const FMatrix& step = r.mats[static_cast<std::size_t>(j - 2)];
      comp = orient > 0 ? step * comp : comp * step;
      rk[i][j] = rank(comp);
    }
  }
  std::vector<int> mult(intervals_.size(), 0);
  for (std::size_t t = 0; t < intervals_.size(); ++t) {
    int i = intervals_[t].lo, j = intervals_[t].hi;
    long long m = static_cast<long long>(rk[i][j]) - (i > 1 ? rk[i - 1][j] : 0) -
                  (j < n ? rk[i][j + 1] : 0) + (i > 1 && j < n ? rk[i - 1][j + 1] : 0);
    if (m < 0) throw internal_error("rank classification produced negative multiplicity");
    mult[t] = static_cast<int>(m);
  }
  return mult;
}

std::vector<int> Catalog::homcount_multiplicities(const Representation& r) const {
  const std::size_t k = intervals_.size();
  std::vector<mpq_class> h(k);
  for (std::size_t i = 0; i < k; ++i)
    h[i] = static_cast<long>(hom_dim(interval_reps_[i], r));
  std::vector<int> mult(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    mpq_class m = 0;
    for (std::size_t j = 0; j < k; ++j) m += hom_inv_[i][j] * h[j];
    if (m.get_den() != 1 || m < 0)
      throw internal_error("hom-count classification produced a non-multiplicity");
    mult[i] = static_cast<int>(m.get_num().get_si());
  }
  return mult;
}

std::vector<int> Catalog::scan_multiplicities(const Representation& r) const {
  const std::size_t k = intervals_.size();
  // candidates: every interval multiset with the exact dimension vector
  std::vector<int> mult(k, 0);
  std::vector<int> found;
  DimVector budget = r.dim;
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == k) {
      if (!dim_is_zero(budget)) return false;
      std::vector<std::pair<Interval, int>> parts;
      for (std::size_t i = 0; i < k; ++i)
        if (mult[i]) parts.push_back({intervals_[i], mult[i]});
      Representation cand = realize(quiver_, field_, IsoClass(std::move(parts)));
      auto basis = hom_basis(cand, r);
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (combos > limit_ / field_.p())
          throw resource_limit_error("iso-class hom scan over limit");
        combos *= field_.p();
      }
      std::vector<std::uint32_t> coeff(basis.size(), 0);
      for (;;) {
        std::vector<FMatrix> f;
        for (int i = 0; i < quiver_.n(); ++i)
          f.push_back(FMatrix(static_cast<std::uint32_t>(r.dim[i]),
                              static_cast<std::uint32_t>(cand.dim[i]), field_));
        for (std::size_t b = 0; b < basis.size(); ++b)
          if (coeff[b])
            for (int i = 0; i < quiver_.n(); ++i) f[i].add_scaled(basis[b][i], coeff[b]);
        bool invertible = true;
        for (int i = 0; i < quiver_.n() && invertible; ++i)
          invertible = rank(f[i]) == static_cast<std::uint32_t>(r.dim[i]);
        if (invertible) {
          found = mult;
          return true;
        }
        std::size_t b = 0;
        while (b < coeff.size() && ++coeff[b] == field_.p()) coeff[b++] = 0;
        if (b == coeff.size()) break;
      }
      return false;
    }
    const Interval& iv = intervals_[idx];
    auto fits = [&]() {
      for (int v = iv.lo; v <= iv.hi; ++v)
        if (budget[v - 1] == 0) return false;
      return true;
    };
    int taken = 0;
    for (;;) {
      if (self(self, idx + 1)) return true;
      if (!fits()) break;
      for (int v = iv.lo; v <= iv.hi; ++v) --budget[v - 1];
      ++mult[idx];
      ++taken;
    }
    mult[idx] = 0;
    while (taken--)
      for (int v = iv.lo; v <= iv.hi; ++v) ++budget[v - 1];
    return false;
  };
  if (!rec(rec, 0)) throw internal_error("no interval multiset is isomorphic to the input");
  return found;
}

ClassId Catalog::class_from_multiplicities(const std::vector<int>& mult) const {
  std::vector<std::pair<Interval, int>> parts;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) parts.push_back({intervals_[i], mult[i]});
  return require_id(IsoClass(std::move(parts)));
}

ClassId Catalog::classify(const Representation& r, ClassifyMethod m) const {
  if (!dim_leq(r.dim, dmax_))
    throw out_of_catalog_error("representation of dimension " + dim_to_string(r.dim) +
                               " beyond catalog bound");
  switch (m) {
    case ClassifyMethod::kRank:
      if (quiver_.orientation() == 0)
        throw std::invalid_argument("rank classification needs an equioriented quiver");
      return class_from_multiplicities(rank_multiplicities(r));
    case ClassifyMethod::kHomCount:
      if (!homcount_ok_) throw internal_error("interval hom matrix not invertible");
      return class_from_multiplicities(homcount_multiplicities(r));
    case ClassifyMethod::kScan:
      return class_from_multiplicities(scan_multiplicities(r));
    case ClassifyMethod::kAuto:
    default:
      if (quiver_.orientation() != 0) return class_from_multiplicities(rank_multiplicities(r));
      if (homcount_ok_) return class_from_multiplicities(homcount_multiplicities(r));
      return class_from_multiplicities(scan_multiplicities(r));
  }
}

const Catalog::GSlice& Catalog::g_slice(ClassId L, const DimVector& sub_dim) const {
  auto key = std::make_pair(L, sub_dim);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = g_slices_.find(key);
    if (it != g_slices_.end()) return it->second;
  }

  GSlice counts;
  const DimVector& d = dims_[L];
  if (dim_nonneg(sub_dim) && dim_leq(sub_dim, d)) {
    const Representation& R = realize_class(L);
    std::vector<const std::vector<Subspace>*> per_vertex;
    mpz_class tuples = 1;
    for (int i = 0; i < quiver_.n(); ++i) {
      per_vertex.push_back(&cached_subspaces(static_cast<std::uint32_t>(d[i]),
                                             static_cast<std::uint32_t>(sub_dim[i])));
      tuples *= static_cast<unsigned long>(per_vertex.back()->size());
    }
    if (tuples > mpz_class(static_cast<unsigned long>(limit_)))
      throw resource_limit_error("submodule slice enumeration over limit");

    std::vector<std::size_t> idx(quiver_.n(), 0);
    std::vector<Subspace> spaces(quiver_.n());
    for (;;) {
      for (int i = 0; i < quiver_.n(); ++i) spaces[i] = (*per_vertex[i])[idx[i]];
      if (auto sq = induced_sub_quot(R, spaces)) {
        ClassId sub_id = classify(sq->first);
        ClassId quot_id = classify(sq->second);
        counts[{quot_id, sub_id}] += 1;
      }
      int k2 = 0;
      while (k2 < quiver_.n() && ++idx[k2] == per_vertex[k2]->size()) idx[k2++] = 0;
      if (k2 == quiver_.n()) break;
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  return g_slices_.try_emplace(std::move(key), std::move(counts)).first->second;
}

void Catalog::ensure_full_slices(ClassId id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (slices_complete_[id]) return;
  }
  const DimVector& d = dims_[id];
  std::vector<ClassId> subs, quots;
  DimVector e(quiver_.n(), 0);
  for (;;) {
    for (const auto& [pair, count] : g_slice(id, e)) {
      quots.push_back(pair.first);
      subs.push_back(pair.second);
    }
    int k2 = 0;
    while (k2 < quiver_.n() && ++e[k2] > d[k2]) e[k2++] = 0;
    if (k2 == quiver_.n()) break;
  }
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  std::sort(quots.begin(), quots.end());
  quots.erase(std::unique(quots.begin(), quots.end()), quots.end());
  std::lock_guard<std::mutex> lock(mu_);
  if (!slices_complete_[id]) {
    subs_[id] = std::move(subs);
    quots_[id] = std::move(quots);
    slices_complete_[id] = 1;
  }
}

const std::vector<ClassId>& Catalog::sub_classes(ClassId id) const {
  ensure_full_slices(id);
  std::lock_guard<std::mutex> lock(mu_);
  return subs_[id];
}

const std::vector<ClassId>& Catalog::quot_classes(ClassId id) const {
  ensure_full_slices(id);
  std::lock_guard<std::mutex> lock(mu_);
  return quots_[id];
}

const Catalog::ExtTable& Catalog::ext_table(ClassId M, ClassId N) const {
  auto key = std::make_pair(M, N);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ext_tables_.find(key);
    if (it != ext_tables_.end()) return it->second;
  }

  DimVector mid_dim = dim_add(dims_[M], dims_[N]);
  if (!dim_leq(mid_dim, dmax_))
    throw out_of_catalog_error("extension middles of dimension " + dim_to_string(mid_dim) +
                               " beyond catalog bound");

  const Representation& RM = realize_class(M);
  const Representation& RN = realize_class(N);
  const int n = quiver_.n();

  // the extension group is the cokernel of f |-> (N_a f_s - f_t M_a)_a;
  // one coset representative per class, supported on non-pivot coordinates
  std::vector<std::size_t> eps_off;
  std::size_t eps_dim = 0;
  for (const auto& a : quiver_.arrows()) {
    eps_off.push_back(eps_dim);
    eps_dim += std::size_t(RM.dim[a.src - 1]) * RN.dim[a.tgt - 1];
  }

  std::size_t f_dim = 0;
  for (int i = 0; i < n; ++i) f_dim += std::size_t(RM.dim[i]) * RN.dim[i];

  FMatrix image(static_cast<std::uint32_t>(f_dim), static_cast<std::uint32_t>(eps_dim), field_);
  {
    std::size_t row = 0;
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < RN.dim[i]; ++r)
        for (int c = 0; c < RM.dim[i]; ++c) {
          // f has a single 1 at vertex i, position (r, c)
          for (std::size_t ai = 0; ai < quiver_.arrows().size(); ++ai) {
            const auto& a = quiver_.arrows()[ai];
            const int s = a.src - 1, t = a.tgt - 1;
            if (i == s) {
              // (N_a f)_[rr, c] = N_a[rr, r]
              for (int rr = 0; rr < RN.dim[t]; ++rr) {
                std::size_t col = eps_off[ai] + std::size_t(rr) * RM.dim[s] + c;
                image.at(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)) =
                    field_.add(image.at(static_cast<std::uint32_t>(row),
                                        static_cast<std::uint32_t>(col)),
                               RN.mats[ai].at(static_cast<std::uint32_t>(rr),
                                              static_cast<std::uint32_t>(r)));
              }
            }
            if (i == t) {
              // -(f M_a)_[r, cc] = -M_a[c, cc]
              for (int cc = 0; cc < RM.dim[s]; ++cc) {
                std::size_t col = eps_off[ai] + std::size_t(r) * RM.dim[s] + cc;
                image.at(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col)) =
                    field_.sub(image.at(static_cast<std::uint32_t>(row),
                                        static_cast<std::uint32_t>(col)),
                               RM.mats[ai].at(static_cast<std::uint32_t>(c),
                                              static_cast<std::uint32_t>(cc)));
              }
            }
          }
          ++row;
        }
  }

  auto [img_rref, img_rank] = rref(image);
  const std::size_t e1 = eps_dim - img_rank;
  if (e1 != ext1(M, N)) throw internal_error("extension space dimension mismatch");

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < e1; ++i) {
    if (combos > limit_ / field_.p())
      throw resource_limit_error("extension class enumeration over limit");
    combos *= field_.p();
  }

  std::vector<bool> is_pivot(eps_dim, false);
  {
    for (std::uint32_t r = 0; r < img_rank; ++r) {
      std::uint32_t c = 0;
      while (img_rref.at(r, c) == 0) ++c;
      is_pivot[c] = true;
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < eps_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  ExtTable table;
  std::vector<std::uint32_t> assign(free_cols.size(), 0);
  for (;;) {
    Representation E;
    E.quiver = &quiver_;
    E.field = field_;
    E.dim.resize(n);
    for (int i = 0; i < n; ++i) E.dim[i] = RN.dim[i] + RM.dim[i];
    for (std::size_t ai = 0; ai < quiver_.arrows().size(); ++ai) {
      const auto& a = quiver_.arrows()[ai];
      const int s = a.src - 1, t = a.tgt - 1;
      FMatrix m(static_cast<std::uint32_t>(E.dim[t]), static_cast<std::uint32_t>(E.dim[s]), field_);
      for (int r = 0; r < RN.dim[t]; ++r)
        for (int c = 0; c < RN.dim[s]; ++c) m.at(r, c) = RN.mats[ai].at(r, c);
      for (int r = 0; r < RM.dim[t]; ++r)
        for (int c = 0; c < RM.dim[s]; ++c)
          m.at(RN.dim[t] + r, RN.dim[s] + c) = RM.mats[ai].at(r, c);
      E.mats.push_back(std::move(m));
    }
    for (std::size_t fidx = 0; fidx < free_cols.size(); ++fidx) {
      if (!assign[fidx]) continue;
      std::size_t col = free_cols[fidx];
      // locate the arrow block and position of this epsilon coordinate
      std::size_t ai = 0;
      while (ai + 1 < eps_off.size() && eps_off[ai + 1] <= col) ++ai;
      const auto& a = quiver_.arrows()[ai];
      const int s = a.src - 1;
      std::size_t rel = col - eps_off[ai];
      std::size_t r = rel / RM.dim[s], c = rel % RM.dim[s];
      E.mats[ai].at(static_cast<std::uint32_t>(r),
                    static_cast<std::uint32_t>(RN.dim[s] + c)) = assign[fidx];
    }
    table[classify(E)] += 1;
    std::size_t k2 = 0;
    while (k2 < assign.size() && ++assign[k2] == field_.p()) assign[k2++] = 0;
    if (k2 == assign.size()) break;
  }

  std::lock_guard<std::mutex> lock(mu_);
  return ext_tables_.try_emplace(std::move(key), std::move(table)).first->second;
}

mpz_class aut_count_closed(const Catalog& cat, ClassId id) {
  // units of End(M): invertible diagonal part times the full radical
  mpz_class out = 1;
  long sum_sq = 0;
  long dim_end = 0;
  const auto k = cat.interval_count();
  std::vector<int> mult(k, 0);
  for (const auto& [iv, m] : cat.cls(id).parts()) {
    for (std::size_t i = 0; i < k; ++i)
      if (cat.intervals()[i] == iv) mult[i] = m;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!mult[i]) continue;
    sum_sq += static_cast<long>(mult[i]) * mult[i];
    out *= gl_order(static_cast<std::uint32_t>(mult[i]), cat.field());
    for (std::size_t j = 0; j < k; ++j)
      dim_end += static_cast<long>(mult[i]) * mult[j] * cat.interval_hom(i, j);
  }
  out *= field_power(cat.field(), static_cast<std::uint64_t>(dim_end - sum_sq));
  return out;
}

}  // namespace hallforge
