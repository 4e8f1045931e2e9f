#include "wonderk/steinberg.hpp"

#include <random>
#include <set>

#include "wonderk/deadline.hpp"
#include "wonderk/error.hpp"

namespace wonderk {

LaurentPoly p_v(const WeylGroup &W, ElemId v) {
  return LaurentPoly::monomial(W.rank(), 1, p_weight(W, v));
}

LaurentPoly steinberg_f(const WeylGroup &W, ElemId v, Subset I) {
  const auto data = stabilizer_and_reps(W, v, I);
  const IntVector mu = steinberg_weight(W, v);
  std::vector<Term> terms;
  for (ElemId x : data.reps)
    terms.push_back({to_exponent(W.act(W.inverse(x), mu)), 1});
  return LaurentPoly::from_terms(W.rank(), 1, std::move(terms));
}

std::vector<SteinbergElement> modified_basis(const WeylGroup &W) {
  const Subset full = full_subset(W.rank());
  std::vector<SteinbergElement> out;
  out.reserve(W.size());
  for (ElemId v = 0; v < W.size(); ++v) {
    const Subset I = cell_of(W, v);
    out.push_back({v, I, steinberg_f(W, v, full & ~I)});
  }
  return out;
}

SteinbergSystem::SteinbergSystem(WeylGroupPtr W) : W_(std::move(W)) {
  basis_ = modified_basis(*W_);
}

void SteinbergSystem::require_order(std::size_t limit, const char *what) const {
  if (W_->size() > limit)
    throw ValidationError("RankBoundExceeded",
                          std::string(what) + " for " + W_->root_system().label().to_string() +
                              " needs |W| = " + std::to_string(W_->size()) +
                              ", above the limit " + std::to_string(limit));
}

LaurentPoly SteinbergSystem::matrix_entry(ElemId u, ElemId v) const {
  return weyl_act(*W_, u, basis_[v].poly, Block::First);
}

void SteinbergSystem::eliminate() const {
  std::call_once(eliminated_, [this] {
    const std::size_t n = W_->size();
    const int r = rank();
    // [M | I], n x 2n
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(2 * n, LaurentPoly(r, 1)));
    for (ElemId u = 0; u < n; ++u) {
      for (ElemId v = 0; v < n; ++v)
        a[u][v] = matrix_entry(u, v);
      a[u][n + u] = LaurentPoly::constant(r, 1, 1);
    }
    LaurentPoly prev = LaurentPoly::constant(r, 1, 1);
    for (std::size_t k = 0; k < n; ++k) {
      check_deadline("Steinberg elimination step " + std::to_string(k) + "/" +
                     std::to_string(n));
      std::size_t pivot = n;
      for (std::size_t i = k; i < n; ++i)
        if (!a[i][k].is_zero() && (pivot == n || a[i][k].size() < a[pivot][k].size()))
          pivot = i;
      if (pivot == n)
        throw InvariantViolation("SingularSystem", "Steinberg matrix is singular at column " +
                                                       std::to_string(k));
      std::swap(a[k], a[pivot]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k)
          continue;
        check_deadline("Steinberg elimination step " + std::to_string(k) + "/" +
                       std::to_string(n) + ", row " + std::to_string(i));
        const LaurentPoly factor = a[i][k];
        for (std::size_t j = 0; j < 2 * n; ++j) {
          if (j == k)
            continue;
          if (j < k && j != i)
            continue; // stays zero
          LaurentPoly num = a[k][k] * a[i][j];
          if (!factor.is_zero() && !a[k][j].is_zero())
            num -= factor * a[k][j];
          auto q = num.divide_exact(prev);
          if (!q)
            throw InvariantViolation("InexactDivision",
                                     "fraction-free elimination produced an inexact quotient");
          a[i][j] = std::move(*q);
        }
        a[i][k] = LaurentPoly(r, 1);
      }
      prev = a[k][k];
    }
    det_ = prev;
    adj_.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        adj_[v][u] = std::move(a[v][n + u]);
  });
}

const LaurentPoly &SteinbergSystem::determinant() const {
  require_order(kTableLimit, "Steinberg determinant");
  eliminate();
  return det_;
}

bool SteinbergSystem::determinant_nonzero() const {
  if (W_->size() <= kTableLimit)
    return !determinant().is_zero();
  require_order(kSpotProductLimit, "Steinberg determinant");
  const std::size_t n = W_->size();
  std::mt19937_64 rng(n);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::uint64_t> x, xinv;
    for (int i = 0; i < rank(); ++i) {
      x.push_back(2 + rng() % (modp::kPrime - 3));
      xinv.push_back(modp::inverse(x.back()));
    }
    auto eval = [&](const LaurentPoly &f) {
      std::uint64_t s = 0;
      for (const auto &t : f.terms()) {
        std::uint64_t m = modp::reduce(t.coef);
        for (int i = 0; i < rank(); ++i)
          for (std::int32_t e = 0; e < std::abs(t.exp[i]); ++e)
            m = modp::mul(m, t.exp[i] > 0 ? x[i] : xinv[i]);
        s = modp::add(s, m);
      }
      return s;
    };
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (ElemId u = 0; u < n; ++u)
      for (ElemId v = 0; v < n; ++v)
        m[u][v] = eval(matrix_entry(u, v));
    bool singular = false;
    for (std::size_t k = 0; k < n && !singular; ++k) {
      std::size_t p = k;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n) {
        singular = true;
        break;
      }
      std::swap(m[k], m[p]);
      const std::uint64_t inv = modp::inverse(m[k][k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        const std::uint64_t f = modp::mul(m[i][k], inv);
        for (std::size_t j = k; j < n; ++j)
          m[i][j] = modp::sub(m[i][j], modp::mul(f, m[k][j]));
      }
    }
    if (!singular)
      return true;
  }
  return false;
}

std::vector<LaurentPoly> SteinbergSystem::expand(const LaurentPoly &g) const {
  if (g.blocks() != 1 || (!g.is_zero() && g.rank() != rank()))
    throw ValidationError("BlockMismatch", "expansion needs a one-block value of matching rank");
  require_order(kSpotProductLimit, "Steinberg expansion");
  if (W_->size() > kTableLimit) {
    std::vector<LaurentPoly> coords;
    {
      std::lock_guard lock(support_mutex_);
      if (!support_)
        support_ = std::make_unique<SupportExpansion>(*W_, basis_);
      coords = support_->expand(g);
    }
    for (ElemId v = 0; v < coords.size(); ++v)
      if (!is_w_invariant(*W_, coords[v]))
        throw InvariantViolation("NonInvariantCoordinate",
                                 "expansion coordinate at " + W_->name(v) + " is not W-invariant");
    if (combine(coords) != g)
      throw InvariantViolation("ExpansionMismatch", "expansion does not recombine to the input");
    return coords;
  }
  eliminate();
  const std::size_t n = W_->size();
  const int r = rank();
  std::vector<LaurentPoly> images(n);
  for (ElemId u = 0; u < n; ++u)
    images[u] = weyl_act(*W_, u, g, Block::First);
  std::vector<LaurentPoly> coords(n, LaurentPoly(r, 1));
  for (ElemId v = 0; v < n; ++v) {
    check_deadline("Steinberg expansion coordinate " + W_->name(v));
    LaurentPoly num(r, 1);
    for (ElemId u = 0; u < n; ++u)
      if (!adj_[v][u].is_zero() && !images[u].is_zero())
        num += adj_[v][u] * images[u];
    auto q = num.divide_exact(det_);
    if (!q)
      throw InvariantViolation("InexactDivision", "final division by the Steinberg "
                                                  "determinant is not exact at " +
                                                      W_->name(v));
    if (!is_w_invariant(*W_, *q))
      throw InvariantViolation("NonInvariantCoordinate",
                               "expansion coordinate at " + W_->name(v) + " is not W-invariant");
    coords[v] = std::move(*q);
  }
  if (combine(coords) != g)
    throw InvariantViolation("ExpansionMismatch", "expansion does not recombine to the input");
  return coords;
}

LaurentPoly SteinbergSystem::combine(const std::vector<LaurentPoly> &coords) const {
  LaurentPoly out(rank(), 1);
  for (ElemId v = 0; v < coords.size(); ++v)
    if (!coords[v].is_zero())
      out += coords[v] * basis_[v].poly;
  return out;
}

const std::vector<LaurentPoly> &SteinbergSystem::structure_constants(ElemId v,
                                                                     ElemId v2) const {
  const auto key = std::minmax(v, v2);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = constants_.find(key);
    if (it != constants_.end())
      return it->second;
  }
  auto coords = expand(basis_[v].poly * basis_[v2].poly);
  const Subset allowed = basis_[v].I | basis_[v2].I;
  for (ElemId w = 0; w < coords.size(); ++w)
    if (!coords[w].is_zero() && !is_subset(cell_of(*W_, w), allowed))
      throw InvariantViolation("SupportViolation",
                               "f_" + W_->name(v) + " * f_" + W_->name(v2) +
                                   " has a nonzero coordinate at " + W_->name(w));
  std::lock_guard lock(cache_mutex_);
  return constants_.emplace(key, std::move(coords)).first->second;
}

SteinbergSystemPtr steinberg_system(const CartanLabel &label, int rank_bound) {
  static std::mutex mutex;
  static std::map<std::string, SteinbergSystemPtr> registry;
  auto W = make_weyl_group(label, rank_bound);
  std::lock_guard lock(mutex);
  auto &slot = registry[label.to_string()];
  if (!slot)
    slot = std::make_shared<const SteinbergSystem>(std::move(W));
  return slot;
}

namespace {

// Minimal representative of x W_K: strip right descents in K.
ElemId minimal_in_left_coset(const WeylGroup &W, ElemId x, Subset K) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < W.rank(); ++i)
      if (contains(K, i) && contains(W.right_descents(x), i)) {
        x = W.times_generator(x, i);
        changed = true;
      }
  }
  return x;
}

std::string instance_name(const WeylGroup &W, Subset I, ElemId v) {
  return "I=" + subset_to_string(I) + ",v=" + W.name(v);
}

} // namespace

Report verify_steinberg_identities(const SteinbergSystem &S) {
  const WeylGroup &W = S.group();
  const Subset full = full_subset(W.rank());
  Report report;
  report.suite = "prop1.8";
  report.type = W.root_system().label().to_string();

  for (Subset I = 0; I <= full; ++I) {
    const Subset K = full & ~I;
    for (ElemId v : minimal_coset_reps(W, K)) {
      check_deadline("orbit-sum identity " + instance_name(W, I, v));
      const LaurentPoly lhs = steinberg_f(W, v, K);
      LaurentPoly rhs(W.rank(), 1);
      for (ElemId x : stabilizer_and_reps(W, v, K).reps)
        rhs += steinberg_f(W, W.multiply(v, x), 0);
      report.add("orbit-sum-identity", instance_name(W, I, v), lhs == rhs,
                 lhs == rhs ? "" : "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
    }
  }

  for (Subset I = 0; I <= full; ++I)
    for (Subset J = 0; J <= full; ++J) {
      if (!is_subset(J, I) || J == I)
        continue;
      const Subset KJ = full & ~J, KI = full & ~I;
      for (ElemId v : minimal_coset_reps(W, KJ)) {
        const std::string inst = "J=" + subset_to_string(J) + "," + instance_name(W, I, v);
        check_deadline("coarsening identity " + inst);
        std::set<ElemId> primes;
        for (ElemId x : stabilizer_and_reps(W, v, KJ).reps)
          primes.insert(minimal_in_left_coset(W, x, KI));
        const LaurentPoly lhs = steinberg_f(W, v, KJ);
        LaurentPoly rhs(W.rank(), 1);
        bool defined = true;
        for (ElemId xp : primes) {
          const ElemId vx = W.multiply(v, xp);
          if ((W.right_descents(vx) & KI) != 0) {
            defined = false;
            break;
          }
          rhs += steinberg_f(W, vx, KI);
        }
        const bool ok = defined && lhs == rhs;
        report.add("coarsening-identity", inst, ok,
                   ok ? "" : "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
      }
    }
  return report;
}

Report verify_direct_sum(const SteinbergSystem &S) {
  const WeylGroup &W = S.group();
  const Subset full = full_subset(W.rank());
  const auto cells = c_sets(W);
  Report report;
  report.suite = "lemma1.9";
  report.type = W.root_system().label().to_string();

  auto support_of = [](const std::vector<LaurentPoly> &coords) {
    std::vector<ElemId> support;
    for (ElemId w = 0; w < coords.size(); ++w)
      if (!coords[w].is_zero())
        support.push_back(w);
    return support;
  };

  std::mt19937 rng(20240611u + static_cast<unsigned>(W.size()));
  std::uniform_int_distribution<int> ex(-2, 2);

  for (Subset I = 0; I <= full; ++I) {
    const Subset K = full & ~I;
    const auto reps = minimal_coset_reps(W, K);
    std::size_t count = 0;
    for (Subset J = 0; J <= full; ++J)
      if (is_subset(J, I))
        count += cells[J].size();
    report.add("cell-count", "I=" + subset_to_string(I), count == reps.size(),
               std::to_string(count) + " vs " + std::to_string(reps.size()));

    // the new basis vectors of R(T)^{W_K} are W_K-invariant
    for (Subset J = 0; J <= full; ++J)
      if (is_subset(J, I))
        for (ElemId v : cells[J]) {
          bool inv = true;
          for (int i = 0; i < W.rank(); ++i)
            if (contains(K, i))
              inv &= weyl_act(W, W.generator(i), S.basis_poly(v), Block::First) ==
                     S.basis_poly(v);
          report.add("basis-invariance", instance_name(W, I, v), inv);
        }

    // Steinberg basis of R(T)^{W_K} plus random W_K-invariants expand inside
    // the cells C^J with J in I.
    std::vector<std::pair<std::string, LaurentPoly>> samples;
    for (ElemId v : reps)
      samples.emplace_back("f^K_" + W.name(v), steinberg_f(W, v, K));
    for (int trial = 0; trial < 3; ++trial) {
      IntVector mu(static_cast<std::size_t>(W.rank()));
      for (auto &x : mu)
        x = ex(rng);
      std::set<IntVector> orbit;
      for (ElemId x : W.parabolic(K))
        orbit.insert(W.act(x, mu));
      std::vector<Term> terms;
      for (const auto &lam : orbit)
        terms.push_back({to_exponent(lam), 1});
      samples.emplace_back("orbit" + to_string(mu),
                           LaurentPoly::from_terms(W.rank(), 1, std::move(terms)));
    }
    for (const auto &[label, g] : samples) {
      check_deadline("direct-sum support I=" + subset_to_string(I) + " " + label);
      const auto support = support_of(S.expand(g));
      std::string bad;
      for (ElemId w : support)
        if (!is_subset(cell_of(W, w), I))
          bad += W.name(w) + " ";
      report.add("direct-sum-support", "I=" + subset_to_string(I) + "," + label, bad.empty(),
                 bad.empty() ? "" : "outside cells: " + bad);
    }
    // directness against the proper-subset part: an element of
    // R(T)^{W_{D\J}}, J proper in I, never touches C^I
    if (I != 0) {
      bool disjoint = true;
      for (Subset J = 0; J <= full; ++J) {
        if (!is_subset(J, I) || J == I)
          continue;
        for (ElemId v : minimal_coset_reps(W, full & ~J))
          for (ElemId w : support_of(S.expand(steinberg_f(W, v, full & ~J))))
            disjoint &= cell_of(W, w) != I;
      }
      report.add("directness", "I=" + subset_to_string(I), disjoint);
    }
  }
  return report;
}

} // namespace wonderk
