#include "wonderk/support_expansion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "wonderk/deadline.hpp"
#include "wonderk/error.hpp"
#include "wonderk/steinberg.hpp"

namespace wonderk {

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
  r = (r & kPrime) + (r >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t inverse(std::uint64_t a) {
  std::uint64_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const Integer &x) {
  static const Integer p(std::to_string(kPrime));
  Integer r = x % p;
  if (r < 0)
    r += p;
  return std::stoull(r.get_str());
}

Integer lift(std::uint64_t x) {
  Integer r(std::to_string(x));
  if (x > kPrime / 2)
    r -= Integer(std::to_string(kPrime));
  return r;
}

} // namespace modp

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool is_dominant(const IntVector &w) {
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 0; });
}

IntVector minus(const IntVector &a, const IntVector &b) {
  IntVector out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= b[i];
  return out;
}

} // namespace

IntVector dominant_of(const RootSystem &rs, IntVector weight) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (weight[i] < 0) {
        const std::int64_t c = weight[i];
        const IntVector &a = rs.simple_root(i);
        for (std::size_t j = 0; j < weight.size(); ++j)
          weight[j] -= c * a[j];
        changed = true;
      }
  }
  return weight;
}

// Dominant weights below nu are reachable from nu by subtracting positive
// roots while staying dominant.
std::vector<IntVector> dominant_below(const RootSystem &rs, const IntVector &nu) {
  std::set<IntVector> seen{nu};
  std::deque<IntVector> queue{nu};
  while (!queue.empty()) {
    const IntVector mu = std::move(queue.front());
    queue.pop_front();
    for (const auto &beta : rs.positive_roots()) {
      IntVector next = minus(mu, beta.weight);
      if (is_dominant(next) && seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

LaurentPoly orbit_sum(const WeylGroup &W, const IntVector &mu) {
  std::set<IntVector> orbit;
  for (ElemId w = 0; w < W.size(); ++w)
    orbit.insert(W.act(w, mu));
  std::vector<Term> terms;
  for (const auto &x : orbit)
    terms.push_back({to_exponent(x), 1});
  return LaurentPoly::from_terms(W.rank(), 1, std::move(terms));
}

SupportExpansion::SupportExpansion(const WeylGroup &W, const std::vector<SteinbergElement> &basis)
    : W_(W), basis_(basis) {
  const RootSystem &rs = W.root_system();
  for (const auto &b : basis)
    basis_dominant_.push_back(dominant_of(rs, to_int_vector(b.poly.terms().front().exp)));
  std::int64_t best = -1;
  for (const auto &r : rs.positive_roots()) {
    std::int64_t height = 0;
    for (auto c : r.simple_coords)
      height += c;
    if (height > best) {
      best = height;
      theta_ = r.weight;
    }
  }
}

// The minimal dominant weight of the coset weight + Q.
IntVector SupportExpansion::coset_key(const IntVector &weight) const {
  const RootSystem &rs = W_.root_system();
  IntVector mu = dominant_of(rs, weight);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto &beta : rs.positive_roots()) {
      IntVector next = minus(mu, beta.weight);
      if (is_dominant(next)) {
        mu = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return mu;
}

void SupportExpansion::rebuild(CosetSystem &sys) const {
  const RootSystem &rs = W_.root_system();
  std::set<std::pair<ElemId, IntVector>> chosen;
  std::map<IntVector, std::vector<IntVector>> below;
  for (const auto &s : sys.seeds)
    for (ElemId v = 0; v < basis_.size(); ++v) {
      const IntVector nu = dominant_of(rs, minus(s, basis_dominant_[v]));
      auto it = below.find(nu);
      if (it == below.end())
        it = below.emplace(nu, dominant_below(rs, nu)).first;
      for (const auto &mu : it->second)
        chosen.emplace(v, mu);
    }
  sys.columns.clear();
  for (const auto &[v, mu] : chosen)
    sys.columns.push_back({v, mu});

  std::map<IntVector, LaurentPoly> orbit_sums;
  std::vector<LaurentPoly> column_polys;
  sys.rows.clear();
  for (const auto &c : sys.columns) {
    auto it = orbit_sums.find(c.mu);
    if (it == orbit_sums.end())
      it = orbit_sums.emplace(c.mu, orbit_sum(W_, c.mu)).first;
    column_polys.push_back(it->second * basis_[c.v].poly);
    for (const auto &t : column_polys.back().terms())
      sys.rows.try_emplace(t.exp, sys.rows.size());
  }

  const std::size_t nrows = sys.rows.size(), ncols = sys.columns.size();
  std::vector<std::vector<std::uint64_t>> a(nrows, std::vector<std::uint64_t>(ncols, 0));
  for (std::size_t k = 0; k < ncols; ++k)
    for (const auto &t : column_polys[k].terms())
      a[sys.rows.at(t.exp)][k] = modp::reduce(t.coef);

  sys.pivot_row.assign(ncols, npos);
  sys.pivot_inv.assign(ncols, 0);
  sys.ops.assign(ncols, {});
  std::vector<bool> used(nrows, false);
  for (std::size_t k = 0; k < ncols; ++k) {
    check_deadline("support elimination column " + std::to_string(k) + "/" +
                   std::to_string(ncols));
    std::size_t p = npos;
    for (std::size_t r = 0; r < nrows && p == npos; ++r)
      if (!used[r] && a[r][k] != 0)
        p = r;
    if (p == npos)
      continue;
    used[p] = true;
    sys.pivot_row[k] = p;
    const std::uint64_t inv = modp::inverse(a[p][k]);
    sys.pivot_inv[k] = inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = k; j < ncols; ++j)
      if (a[p][j] != 0) {
        a[p][j] = modp::mul(a[p][j], inv);
        nz.push_back(j);
      }
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == p || a[r][k] == 0)
        continue;
      const std::uint64_t f = a[r][k];
      for (std::size_t j : nz)
        a[r][j] = modp::sub(a[r][j], modp::mul(f, a[p][j]));
      sys.ops[k].emplace_back(static_cast<std::uint32_t>(r), f);
    }
  }
}

bool SupportExpansion::solve(const CosetSystem &sys, const LaurentPoly &g,
                             std::vector<std::vector<Term>> &out) const {
  std::vector<std::uint64_t> b(sys.rows.size(), 0);
  for (const auto &t : g.terms())
    b[sys.rows.at(t.exp)] = modp::reduce(t.coef);
  std::vector<bool> pivot(sys.rows.size(), false);
  for (std::size_t k = 0; k < sys.columns.size(); ++k) {
    const std::size_t p = sys.pivot_row[k];
    if (p == npos)
      continue;
    pivot[p] = true;
    b[p] = modp::mul(b[p], sys.pivot_inv[k]);
    if (b[p] == 0)
      continue;
    for (const auto &[r, f] : sys.ops[k])
      b[r] = modp::sub(b[r], modp::mul(f, b[p]));
  }
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!pivot[r] && b[r] != 0)
      return false;
  for (std::size_t k = 0; k < sys.columns.size(); ++k) {
    const std::size_t p = sys.pivot_row[k];
    if (p == npos || b[p] == 0)
      continue;
    const Integer x = modp::lift(b[p]);
    const LaurentPoly m = orbit_sum(W_, sys.columns[k].mu);
    for (const auto &t : m.terms())
      out[sys.columns[k].v].push_back({t.exp, x});
  }
  return true;
}

std::vector<LaurentPoly> SupportExpansion::expand(const LaurentPoly &g) {
  const int r = W_.rank();
  std::map<IntVector, std::vector<Term>> parts;
  for (const auto &t : g.terms())
    parts[coset_key(to_int_vector(t.exp))].push_back(t);

  std::vector<std::vector<Term>> out(basis_.size());
  for (auto &[key, terms] : parts) {
    const LaurentPoly part = LaurentPoly::from_terms(r, 1, std::move(terms));
    CosetSystem &sys = systems_[key];
    bool solved = false;
    for (int attempt = 0; attempt < 4 && !solved; ++attempt) {
      std::set<IntVector> fresh;
      for (const auto &t : part.terms())
        if (!sys.rows.count(t.exp))
          fresh.insert(dominant_of(W_.root_system(), to_int_vector(t.exp)));
      if (!fresh.empty()) {
        sys.seeds.insert(sys.seeds.end(), fresh.begin(), fresh.end());
        rebuild(sys);
      }
      std::vector<std::vector<Term>> local(basis_.size());
      if (solve(sys, part, local)) {
        for (std::size_t v = 0; v < local.size(); ++v)
          for (auto &t : local[v])
            out[v].push_back(std::move(t));
        solved = true;
      } else {
        for (auto &s : sys.seeds)
          for (std::size_t i = 0; i < s.size(); ++i)
            s[i] += theta_[i];
        rebuild(sys);
      }
    }
    if (!solved)
      throw InvariantViolation("ExpansionFailed",
                               "no solution on the bounded candidate support");
  }
  std::vector<LaurentPoly> coords;
  for (auto &terms : out)
    coords.push_back(LaurentPoly::from_terms(r, 1, std::move(terms)));
  return coords;
}

} // namespace wonderk
