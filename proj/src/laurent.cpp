#include "wonderk/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wonderk/error.hpp"

namespace wonderk {

Exponent to_exponent(std::span<const std::int64_t> v) {
  Exponent e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    e[i] = static_cast<std::int32_t>(v[i]);
  return e;
}

IntVector to_int_vector(const Exponent &e) { return IntVector(e.begin(), e.end()); }

namespace {

bool exp_less(const Term &a, const Term &b) { return a.exp < b.exp; }

// Sorts, merges equal exponents and drops zeros.
void normalize(std::vector<Term> &terms) {
  std::sort(terms.begin(), terms.end(), exp_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].exp == terms[i].exp)
      c += terms[j++].coef;
    if (c != 0) {
      terms[out].exp = std::move(terms[i].exp);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Exponent add_exp(const Exponent &a, const Exponent &b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = a[i] + b[i];
  return e;
}

Exponent sub_exp(const Exponent &a, const Exponent &b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    e[i] = a[i] - b[i];
  return e;
}

} // namespace

LaurentPoly LaurentPoly::constant(int rank, int blocks, const Integer &c) {
  return monomial(rank, blocks, Exponent(static_cast<std::size_t>(rank * blocks), 0), c);
}

LaurentPoly LaurentPoly::monomial(int rank, int blocks, Exponent exp, const Integer &c) {
  if (exp.size() != static_cast<std::size_t>(rank * blocks))
    throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  LaurentPoly p(rank, blocks);
  if (c != 0)
    p.terms_.push_back({std::move(exp), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, int blocks, std::span<const std::int64_t> exp,
                                  const Integer &c) {
  return monomial(rank, blocks, to_exponent(exp), c);
}

LaurentPoly LaurentPoly::from_terms(int rank, int blocks, std::vector<Term> terms) {
  LaurentPoly p(rank, blocks);
  for (const auto &t : terms)
    if (t.exp.size() != static_cast<std::size_t>(rank * blocks))
      throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                     [](std::int32_t x) { return x == 0; });
}

Integer LaurentPoly::coefficient(const Exponent &exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exp, 0}, exp_less);
  if (it != terms_.end() && it->exp == exp)
    return it->coef;
  return 0;
}

void LaurentPoly::check_compatible(const LaurentPoly &other) const {
  if (rank_ != other.rank_ || blocks_ != other.blocks_)
    throw ValidationError("BlockMismatch", "incompatible Laurent polynomial shapes");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.coef = -t.coef;
  return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
  if (other.is_zero())
    return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  check_compatible(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coef + b->coef;
      if (c != 0)
        merged.push_back({std::move(a->exp), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other) { return *this += -other; }

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other) {
  *this = *this * other;
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coef *= c;
  return *this;
}

namespace {

// Mixed-radix packing of exponents inside a box [lo, hi]; the last
// coordinate varies fastest, so key order equals lexicographic order.
struct Box {
  std::vector<std::int32_t> lo, hi;
  std::vector<std::uint64_t> stride;
  std::uint64_t size = 0; // 0 when the box is too large to pack

  static Box of(const std::vector<std::int32_t> &lo, const std::vector<std::int32_t> &hi) {
    Box b{lo, hi, std::vector<std::uint64_t>(lo.size()), 1};
    for (std::size_t k = lo.size(); k-- > 0;) {
      b.stride[k] = b.size;
      const std::uint64_t w = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
      if (b.size > (std::uint64_t{1} << 40) / w) {
        b.size = 0;
        return b;
      }
      b.size *= w;
    }
    return b;
  }

  std::uint64_t key(const Exponent &e) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      k += static_cast<std::uint64_t>(e[i] - lo[i]) * stride[i];
    return k;
  }

  Exponent unpack(std::uint64_t k) const {
    Exponent e(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      e[i] = lo[i] + static_cast<std::int32_t>(k / stride[i]);
      k %= stride[i];
    }
    return e;
  }
};

std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>
exponent_bounds(const std::vector<Term> &ts, std::size_t n) {
  std::vector<std::int32_t> lo(n, INT32_MAX), hi(n, INT32_MIN);
  for (const auto &t : ts)
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], t.exp[k]);
      hi[k] = std::max(hi[k], t.exp[k]);
    }
  return {lo, hi};
}

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

} // namespace

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly &shape = a.rank_ ? a : b;
    return LaurentPoly(shape.rank_, shape.blocks_);
  }
  a.check_compatible(b);
  const std::size_t n = static_cast<std::size_t>(a.width());
  const auto [alo, ahi] = exponent_bounds(a.terms_, n);
  const auto [blo, bhi] = exponent_bounds(b.terms_, n);
  std::vector<std::int32_t> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = alo[k] + blo[k];
    hi[k] = ahi[k] + bhi[k];
  }
  const Box box = Box::of(lo, hi);
  const std::uint64_t pairs = a.terms_.size() * b.terms_.size();
  LaurentPoly out(a.rank_, a.blocks_);

  if (box.size != 0 && box.size <= kDenseLimit && box.size <= 8 * pairs + 64) {
    // Dense accumulation.  key(x + y) = key_a(x) + key_b(y) with offsets
    // taken relative to each factor's own lower corner.
    Box abox = box, bbox = box;
    abox.lo = alo;
    bbox.lo = blo;
    std::vector<std::uint64_t> bkeys;
    bkeys.reserve(b.terms_.size());
    for (const auto &y : b.terms_)
      bkeys.push_back(bbox.key(y.exp));
    std::vector<mpz_class> acc(box.size);
    for (const auto &x : a.terms_) {
      const std::uint64_t ka = abox.key(x.exp);
      for (std::size_t j = 0; j < b.terms_.size(); ++j)
        mpz_addmul(acc[ka + bkeys[j]].get_mpz_t(), x.coef.get_mpz_t(),
                   b.terms_[j].coef.get_mpz_t());
    }
    for (std::uint64_t k = 0; k < box.size; ++k)
      if (acc[k] != 0)
        out.terms_.push_back({box.unpack(k), std::move(acc[k])});
    return out;
  }

  std::vector<Term> prod;
  prod.reserve(pairs);
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_)
      prod.push_back({add_exp(x.exp, y.exp), x.coef * y.coef});
  normalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent &shift) const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.exp = add_exp(t.exp, shift);
  return p; // translation preserves lex order
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const Integer &c) const {
  if (c == 0)
    throw std::invalid_argument("LaurentPoly: division by zero");
  LaurentPoly q = *this;
  for (auto &t : q.terms_) {
    if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  }
  return q;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly &d) const {
  if (d.is_zero())
    throw std::invalid_argument("LaurentPoly: division by zero");
  if (is_zero())
    return LaurentPoly(d.rank_, d.blocks_);
  check_compatible(d);
  if (d.terms_.size() == 1) {
    auto q = divide_exact(d.terms_[0].coef);
    if (!q)
      return std::nullopt;
    Exponent neg(d.terms_[0].exp.size());
    for (std::size_t i = 0; i < neg.size(); ++i)
      neg[i] = -d.terms_[0].exp[i];
    return q->shifted(neg);
  }

  // Quotient exponents are confined to [flo - dlo, fhi - dhi] coordinatewise
  // (Newton polytopes add under multiplication).  Leaving that box proves
  // non-divisibility, which also guarantees termination.
  const std::size_t n = static_cast<std::size_t>(width());
  const auto [flo, fhi] = exponent_bounds(terms_, n);
  const auto [dlo, dhi] = exponent_bounds(d.terms_, n);
  std::vector<std::int32_t> qlo(n), qhi(n);
  for (std::size_t k = 0; k < n; ++k) {
    qlo[k] = flo[k] - dlo[k];
    qhi[k] = fhi[k] - dhi[k];
    if (qlo[k] > qhi[k])
      return std::nullopt;
  }
  const Term &lead = d.terms_.back();
  std::vector<Term> quotient;
  auto in_box = [&](const Exponent &e) {
    for (std::size_t k = 0; k < n; ++k)
      if (e[k] < qlo[k] || e[k] > qhi[k])
        return false;
    return true;
  };

  const Box fbox = Box::of(flo, fhi);
  if (fbox.size != 0 && fbox.size <= kDenseLimit && fbox.size <= 16 * terms_.size() + 256) {
    // Dense remainder over the box of f; every update e + e_d stays inside.
    Box qbox = fbox, dbox = fbox;
    qbox.lo = qlo;
    dbox.lo = dlo;
    std::vector<std::uint64_t> dkeys;
    for (const auto &t : d.terms_)
      dkeys.push_back(dbox.key(t.exp));
    std::vector<mpz_class> rem(fbox.size);
    for (const auto &t : terms_)
      rem[fbox.key(t.exp)] = t.coef;
    std::uint64_t top = fbox.size;
    while (true) {
      while (top > 0 && rem[top - 1] == 0)
        --top;
      if (top == 0)
        break;
      Exponent e = sub_exp(fbox.unpack(top - 1), lead.exp);
      if (!in_box(e))
        return std::nullopt;
      mpz_class &r = rem[top - 1];
      if (!mpz_divisible_p(r.get_mpz_t(), lead.coef.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), r.get_mpz_t(), lead.coef.get_mpz_t());
      const std::uint64_t kq = qbox.key(e);
      for (std::size_t j = 0; j < d.terms_.size(); ++j)
        mpz_submul(rem[kq + dkeys[j]].get_mpz_t(), c.get_mpz_t(),
                   d.terms_[j].coef.get_mpz_t());
      quotient.push_back({std::move(e), std::move(c)});
    }
  } else {
    std::map<Exponent, Integer> rem;
    for (const auto &t : terms_)
      rem.emplace_hint(rem.end(), t.exp, t.coef);
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      Exponent e = sub_exp(top->first, lead.exp);
      if (!in_box(e))
        return std::nullopt;
      if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coef.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lead.coef.get_mpz_t());
      for (const auto &t : d.terms_) {
        auto [it, inserted] = rem.try_emplace(add_exp(t.exp, e), 0);
        it->second -= c * t.coef;
        if (it->second == 0)
          rem.erase(it);
      }
      quotient.push_back({std::move(e), std::move(c)});
    }
  }
  std::reverse(quotient.begin(), quotient.end());
  LaurentPoly q(rank_, blocks_);
  q.terms_ = std::move(quotient);
  return q;
}

bool LaurentPoly::operator==(const LaurentPoly &other) const {
  if (terms_.size() != other.terms_.size())
    return false;
  if (is_zero())
    return true;
  if (rank_ != other.rank_ || blocks_ != other.blocks_)
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != other.terms_[i].exp || terms_[i].coef != other.terms_[i].coef)
      return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool unit = std::all_of(it->exp.begin(), it->exp.end(),
                                  [](std::int32_t x) { return x == 0; });
    Integer c = it->coef;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (unit) {
      out += c.get_str();
      continue;
    }
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += c.get_str() + "*";
    out += "e^" + wonderk::to_string(to_int_vector(it->exp));
  }
  return out;
}

LaurentPoly weyl_act(const WeylGroup &W, ElemId w, const LaurentPoly &f, Block block) {
  const int r = f.rank();
  if (f.blocks() == 1 && block == Block::Second)
    throw ValidationError("BlockMismatch", "second block requested on a one-block value");
  if (w == W.identity() || f.is_zero())
    return f;
  const IntMatrix &m = W.element(w).matrix;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto &t : f.terms()) {
    Exponent e = t.exp;
    for (int b = 0; b < f.blocks(); ++b) {
      const bool hit = block == Block::Diagonal || (block == Block::First && b == 0) ||
                       (block == Block::Second && b == 1);
      if (!hit)
        continue;
      for (int i = 0; i < r; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < r; ++j)
          s += m(i, j) * t.exp[b * r + j];
        e[b * r + i] = static_cast<std::int32_t>(s);
      }
    }
    out.push_back({std::move(e), t.coef});
  }
  return LaurentPoly::from_terms(r, f.blocks(), std::move(out));
}

LaurentPoly weyl_act_pair(const WeylGroup &W, ElemId u, ElemId v, const LaurentPoly &f) {
  if (f.blocks() != 2)
    throw ValidationError("BlockMismatch", "pair action needs a two-block value");
  return weyl_act(W, v, weyl_act(W, u, f, Block::First), Block::Second);
}

bool is_invariant(const WeylGroup &W, const LaurentPoly &f, const std::vector<ElemId> &gens,
                  Block block) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](ElemId g) { return weyl_act(W, g, f, block) == f; });
}

bool is_w_invariant(const WeylGroup &W, const LaurentPoly &f, Block block) {
  std::vector<ElemId> gens;
  for (int i = 0; i < W.rank(); ++i)
    gens.push_back(W.generator(i));
  return is_invariant(W, f, gens, block);
}

bool in_character_ideal(const LaurentPoly &h, std::span<const std::int64_t> chi) {
  if (static_cast<int>(chi.size()) != h.width() && !h.is_zero())
    throw ValidationError("BlockMismatch", "character length does not match the ring");
  const std::int64_t m = gcd_of(chi);
  if (m == 0)
    throw ValidationError("ZeroCharacter", "congruence modulo 1 - e^0 is undefined");
  if (h.is_zero())
    return true;
  IntVector prim(chi.begin(), chi.end());
  for (auto &x : prim)
    x /= m;
  const IntMatrix u = unimodular_completion(prim);
  // In coordinates y = U x, chi = m e_1; the class of x in L / Z chi is
  // (y_1 mod m, y_2, ..., y_n).
  std::map<IntVector, Integer> classes;
  for (const auto &t : h.terms()) {
    IntVector y = u * std::span<const std::int64_t>(to_int_vector(t.exp));
    y[0] = ((y[0] % m) + m) % m;
    classes[y] += t.coef;
  }
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto &kv) { return kv.second == 0; });
}

namespace {

IntVector place_in_block(int rank, int blocks, std::span<const std::int64_t> lambda,
                         Block block) {
  if (static_cast<int>(lambda.size()) != rank)
    throw ValidationError("BlockMismatch", "weight length does not match the rank");
  if (blocks == 1 && block == Block::Second)
    throw ValidationError("BlockMismatch", "second block requested on a one-block value");
  IntVector full(static_cast<std::size_t>(rank * blocks), 0);
  for (int b = 0; b < blocks; ++b) {
    const bool hit = block == Block::Diagonal || (block == Block::First && b == 0) ||
                     (block == Block::Second && b == 1);
    if (hit)
      std::copy(lambda.begin(), lambda.end(), full.begin() + b * rank);
  }
  return full;
}

} // namespace

bool congruent_mod_character(const LaurentPoly &f, const LaurentPoly &g,
                             std::span<const std::int64_t> chi, Block block) {
  const LaurentPoly &shape = f.rank() ? f : g;
  return in_character_ideal(f - g, place_in_block(shape.rank(), shape.blocks(), chi, block));
}

Integer augmentation(const LaurentPoly &f) {
  Integer s = 0;
  for (const auto &t : f.terms())
    s += t.coef;
  return s;
}

LaurentPoly tensor(const LaurentPoly &f, const LaurentPoly &g) {
  if (f.blocks() != 1 || g.blocks() != 1 || f.rank() != g.rank())
    throw ValidationError("BlockMismatch", "tensor needs two one-block values of equal rank");
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const auto &x : f.terms())
    for (const auto &y : g.terms()) {
      Exponent e = x.exp;
      e.insert(e.end(), y.exp.begin(), y.exp.end());
      out.push_back({std::move(e), x.coef * y.coef});
    }
  return LaurentPoly::from_terms(f.rank(), 2, std::move(out));
}

LaurentPoly one_minus_exp(int rank, int blocks, std::span<const std::int64_t> lambda,
                          Block block) {
  IntVector neg = place_in_block(rank, blocks, lambda, block);
  for (auto &x : neg)
    x = -x;
  return LaurentPoly::constant(rank, blocks, 1) - LaurentPoly::monomial(rank, blocks, neg);
}

LaurentPoly collapse_block(const LaurentPoly &f, Block keep) {
  if (f.blocks() != 2 || keep == Block::Diagonal)
    throw ValidationError("BlockMismatch", "collapse needs a two-block value");
  const int r = f.rank();
  const int offset = keep == Block::First ? 0 : r;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto &t : f.terms())
    out.push_back({Exponent(t.exp.begin() + offset, t.exp.begin() + offset + r), t.coef});
  return LaurentPoly::from_terms(r, 1, std::move(out));
}

std::vector<std::pair<Exponent, LaurentPoly>> split_by_first_block(const LaurentPoly &f) {
  if (f.blocks() != 2)
    throw ValidationError("BlockMismatch", "split needs a two-block value");
  const int r = f.rank();
  std::vector<std::pair<Exponent, LaurentPoly>> out;
  std::vector<Term> current;
  Exponent mu;
  auto flush = [&]() {
    if (!current.empty())
      out.emplace_back(mu, LaurentPoly::from_terms(r, 1, std::move(current)));
    current.clear();
  };
  // terms are lex sorted, so equal first blocks are contiguous
  for (const auto &t : f.terms()) {
    Exponent head(t.exp.begin(), t.exp.begin() + r);
    if (current.empty() || head != mu) {
      flush();
      mu = std::move(head);
    }
    current.push_back({Exponent(t.exp.begin() + r, t.exp.end()), t.coef});
  }
  flush();
  return out;
}

} // namespace wonderk
