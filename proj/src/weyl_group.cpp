#include "wonderk/weyl_group.hpp"

#include <algorithm>

#include "wonderk/error.hpp"

namespace wonderk {

std::vector<int> subset_indices(Subset set) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(set, i))
      out.push_back(i + 1);
  return out;
}

Subset subset_from_indices(const std::vector<int> &indices, int rank) {
  Subset s = 0;
  for (int i : indices) {
    if (i < 1 || i > rank)
      throw ValidationError("InvalidSubset", "simple root index " + std::to_string(i) +
                                                 " out of range 1.." + std::to_string(rank));
    s |= Subset{1} << (i - 1);
  }
  return s;
}

std::string subset_to_string(Subset set) {
  std::string out = "[";
  bool first = true;
  for (int i : subset_indices(set)) {
    if (!first)
      out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

namespace {

IntMatrix simple_reflection(const RootSystem &rs, int i) {
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  IntMatrix s = IntMatrix::identity(r);
  const IntVector &alpha = rs.simple_root(i);
  for (std::size_t row = 0; row < r; ++row)
    s(row, i) -= alpha[row];
  return s;
}

} // namespace

WeylGroup::WeylGroup(RootSystem rs, int rank_bound) : rs_(std::move(rs)) {
  const int r = rs_.rank();
  if (r > rank_bound)
    throw ValidationError("RankBoundExceeded",
                          "rank " + std::to_string(r) + " of " + rs_.label().to_string() +
                              " exceeds the configured bound " + std::to_string(rank_bound));
  std::vector<IntMatrix> gens;
  for (int i = 0; i < r; ++i)
    gens.push_back(simple_reflection(rs_, i));

  // Breadth-first search by right multiplication.  Parents of each level are
  // visited in lexicographic order, so the first word reaching an element is
  // its lexicographically smallest reduced word and BFS order is canonical.
  elements_.push_back({{}, IntMatrix::identity(static_cast<std::size_t>(r))});
  by_matrix_[elements_[0].matrix.data()] = 0;
  std::size_t level_begin = 0;
  while (level_begin < elements_.size()) {
    const std::size_t level_end = elements_.size();
    for (std::size_t p = level_begin; p < level_end; ++p)
      for (int g = 0; g < r; ++g) {
        IntMatrix m = elements_[p].matrix * gens[g];
        if (by_matrix_.count(m.data()))
          continue;
        std::vector<int> word = elements_[p].word;
        word.push_back(g + 1);
        by_matrix_[m.data()] = elements_.size();
        elements_.push_back({std::move(word), std::move(m)});
      }
    level_begin = level_end;
  }

  const std::size_t n = elements_.size();
  right_gen_.assign(n, std::vector<ElemId>(r));
  descents_.assign(n, 0);
  for (ElemId w = 0; w < n; ++w)
    for (int g = 0; g < r; ++g) {
      const ElemId ws = find(elements_[w].matrix * gens[g]);
      right_gen_[w][g] = ws;
      if (length(ws) < length(w))
        descents_[w] |= Subset{1} << g;
    }
  gen_.resize(r);
  for (int g = 0; g < r; ++g)
    gen_[g] = right_gen_[0][g];

  inverse_.resize(n);
  for (ElemId w = 0; w < n; ++w) {
    std::vector<int> rev(elements_[w].word.rbegin(), elements_[w].word.rend());
    inverse_[w] = from_word(rev);
  }
  // s_i(mu) = mu - mu_i alpha_i^vee, where alpha_i^vee is row i of the Cartan
  // matrix in the fundamental-coweight basis.
  std::vector<IntMatrix> cogens;
  for (int g = 0; g < r; ++g) {
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
      m(k, g) -= rs_.cartan_matrix()(g, k);
    cogens.push_back(std::move(m));
  }
  coweight_.resize(n);
  for (ElemId w = 0; w < n; ++w) {
    coweight_[w] = IntMatrix::identity(static_cast<std::size_t>(r));
    for (int g : elements_[w].word)
      coweight_[w] = coweight_[w] * cogens[g - 1];
  }
}

ElemId WeylGroup::find(const IntMatrix &matrix) const {
  auto it = by_matrix_.find(matrix.data());
  if (it == by_matrix_.end() || matrix.rows() != static_cast<std::size_t>(rank()))
    throw InvariantViolation("NotInWeylGroup", "matrix is not an element of W");
  return it->second;
}

ElemId WeylGroup::from_word(const std::vector<int> &word) const {
  ElemId w = identity();
  for (int g : word) {
    if (g < 1 || g > rank())
      throw ValidationError("InvalidWeylElement",
                            "generator index " + std::to_string(g) + " out of range");
    w = right_gen_[w][g - 1];
  }
  return w;
}

ElemId WeylGroup::multiply(ElemId a, ElemId b) const {
  ElemId w = a;
  for (int g : elements_[b].word)
    w = right_gen_[w][g - 1];
  return w;
}

std::size_t WeylGroup::inversion_count(ElemId w) const {
  std::size_t count = 0;
  for (const Root &root : rs_.positive_roots())
    if (rs_.root_sign(act(w, root.weight)) < 0)
      ++count;
  return count;
}

IntVector WeylGroup::act(ElemId w, std::span<const std::int64_t> weight) const {
  return elements_[w].matrix * weight;
}

bool WeylGroup::in_parabolic(ElemId w, Subset set) const {
  return std::all_of(elements_[w].word.begin(), elements_[w].word.end(),
                     [set](int g) { return contains(set, g - 1); });
}

std::vector<ElemId> WeylGroup::parabolic(Subset set) const {
  std::vector<ElemId> out;
  for (ElemId w = 0; w < size(); ++w)
    if (in_parabolic(w, set))
      out.push_back(w);
  return out;
}

std::string WeylGroup::name(ElemId w) const {
  const auto &word = elements_[w].word;
  if (word.empty())
    return "1";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k)
      out += ".";
    out += rank() == 1 ? std::string("s") : "s" + std::to_string(word[k]);
  }
  return out;
}

ElemId WeylGroup::parse(std::string_view text) const {
  auto fail = [&]() -> ElemId {
    throw ValidationError("InvalidWeylElement",
                          "cannot parse Weyl element '" + std::string(text) + "'");
  };
  if (text == "1" || text.empty())
    return identity();
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dot = std::min(text.find('.', pos), text.size());
    const std::string_view tok = text.substr(pos, dot - pos);
    if (tok.empty() || tok[0] != 's')
      return fail();
    if (tok.size() == 1) {
      if (rank() != 1)
        return fail();
      word.push_back(1);
    } else {
      int g = 0;
      for (char c : tok.substr(1)) {
        if (c < '0' || c > '9')
          return fail();
        g = g * 10 + (c - '0');
        if (g > 64)
          return fail();
      }
      if (g < 1 || g > rank())
        return fail();
      word.push_back(g);
    }
    pos = dot + 1;
  }
  return from_word(word);
}

WeylGroupPtr make_weyl_group(const CartanLabel &label, int rank_bound) {
  return std::make_shared<const WeylGroup>(build_root_system(label), rank_bound);
}

std::vector<ElemId> minimal_coset_reps(const WeylGroup &W, Subset set) {
  if (!is_subset(set, full_subset(W.rank())))
    throw ValidationError("InvalidSubset", "subset " + subset_to_string(set) +
                                               " is not contained in the simple roots");
  std::vector<ElemId> out;
  for (ElemId w = 0; w < W.size(); ++w)
    if ((W.right_descents(w) & set) == 0)
      out.push_back(w);
  return out;
}

std::vector<std::vector<ElemId>> c_sets(const WeylGroup &W) {
  std::vector<std::vector<ElemId>> cells(std::size_t{1} << W.rank());
  for (ElemId w = 0; w < W.size(); ++w)
    cells[W.right_descents(w)].push_back(w);
  return cells;
}

IntVector p_weight(const WeylGroup &W, ElemId v) {
  const auto &rs = W.root_system();
  const ElemId vinv = W.inverse(v);
  IntVector p(static_cast<std::size_t>(W.rank()), 0);
  for (int i = 0; i < W.rank(); ++i)
    if (rs.root_sign(W.act(vinv, rs.simple_root(i))) < 0)
      p[i] = 1;
  return p;
}

IntVector steinberg_weight(const WeylGroup &W, ElemId v) {
  return W.act(W.inverse(v), p_weight(W, v));
}

StabilizerData orbit_stabilizer(const WeylGroup &W, const IntVector &weight, Subset set) {
  StabilizerData out;
  std::map<IntVector, ElemId> coset_rep;
  for (ElemId x : W.parabolic(set)) {
    if (W.act(x, weight) == weight)
      out.stabilizer.push_back(x);
    // W_I(v) x  <->  x^{-1}(weight); canonical order visits the shortest first
    coset_rep.try_emplace(W.act(W.inverse(x), weight), x);
  }
  for (const auto &[image, x] : coset_rep)
    out.reps.push_back(x);
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

StabilizerData stabilizer_and_reps(const WeylGroup &W, ElemId v, Subset set) {
  if ((W.right_descents(v) & set) != 0)
    throw ValidationError("NotMinimalRep", W.name(v) + " is not a minimal coset "
                                               "representative for " + subset_to_string(set));
  return orbit_stabilizer(W, steinberg_weight(W, v), set);
}

} // namespace wonderk
