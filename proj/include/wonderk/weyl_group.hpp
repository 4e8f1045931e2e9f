#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wonderk/root_system.hpp"

namespace wonderk {

/// Subset of the simple roots as a bitmask: bit i <-> alpha_{i+1}.
using Subset = std::uint32_t;

/// Index of a Weyl group element in the canonical (length, lex word) order.
using ElemId = std::size_t;

inline constexpr int kDefaultRankBound = 4;

inline bool contains(Subset set, int i) { return (set >> i) & 1u; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset full_subset(int rank) { return (Subset{1} << rank) - 1; }
std::vector<int> subset_indices(Subset set); // 1-based, sorted
Subset subset_from_indices(const std::vector<int> &indices, int rank);
std::string subset_to_string(Subset set); // "[1,3]"

struct WeylElement {
  std::vector<int> word; // reduced word, generator indices 1..r
  IntMatrix matrix;      // action on the weight lattice (fundamental-weight basis)
};

struct StabilizerData {
  std::vector<ElemId> stabilizer; // W_I(v)
  std::vector<ElemId> reps;       // W_I^l(v), canonical order
};

/// The finite Weyl group of a root system, fully enumerated.  Elements are
/// stored in canonical order (length, then lexicographic reduced word); the
/// identity has index 0.  Immutable after construction.
class WeylGroup {
public:
  /// Throws ValidationError("RankBoundExceeded") if rank > rank_bound.
  explicit WeylGroup(RootSystem rs, int rank_bound = kDefaultRankBound);

  const RootSystem &root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const WeylElement &element(ElemId w) const { return elements_[w]; }
  std::size_t length(ElemId w) const { return elements_[w].word.size(); }
  ElemId identity() const { return 0; }
  ElemId longest() const { return size() - 1; }
  ElemId generator(int i) const { return gen_[i]; } // 0-based i

  ElemId multiply(ElemId a, ElemId b) const;
  ElemId inverse(ElemId w) const { return inverse_[w]; }
  ElemId times_generator(ElemId w, int i) const { return right_gen_[w][i]; }

  /// Lookup by action matrix; throws if the matrix is not in W.
  ElemId find(const IntMatrix &matrix) const;
  ElemId from_word(const std::vector<int> &word) const;

  /// Right descent set {i : l(w s_i) < l(w)}.
  Subset right_descents(ElemId w) const { return descents_[w]; }
  /// |{alpha > 0 : w(alpha) < 0}|, computed from the action matrix.
  std::size_t inversion_count(ElemId w) const;

  IntVector act(ElemId w, std::span<const std::int64_t> weight) const;
  /// Matrix of w on the coweight lattice (fundamental-coweight basis).
  const IntMatrix &coweight_matrix(ElemId w) const { return coweight_[w]; }

  bool in_parabolic(ElemId w, Subset set) const;
  std::vector<ElemId> parabolic(Subset set) const;

  /// "1", "s" (rank 1) or "s1.s2.s1".
  std::string name(ElemId w) const;
  /// Inverse of name(); also accepts "s1" in rank 1.
  ElemId parse(std::string_view text) const;

private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::vector<IntMatrix> coweight_;
  std::map<std::vector<std::int64_t>, ElemId> by_matrix_;
  std::vector<std::vector<ElemId>> right_gen_;
  std::vector<ElemId> inverse_;
  std::vector<Subset> descents_;
  std::vector<ElemId> gen_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

WeylGroupPtr make_weyl_group(const CartanLabel &label, int rank_bound = kDefaultRankBound);

/// W^I = {w : l(w s) > l(w) for all s in I}, canonical order.
std::vector<ElemId> minimal_coset_reps(const WeylGroup &W, Subset set);

/// Partition cells C^I, indexed by the bitmask I (vector of size 2^r).
/// C^I consists of the elements whose right descent set is exactly I.
std::vector<std::vector<ElemId>> c_sets(const WeylGroup &W);

/// Exponent of v^{-1} p_v where p_v = prod_{v^{-1} alpha_i < 0} e^{omega_i}.
IntVector p_weight(const WeylGroup &W, ElemId v);
IntVector steinberg_weight(const WeylGroup &W, ElemId v);

/// Stabilizer of v^{-1} p_v in W_I and minimal representatives of the right
/// cosets W_I(v) x.  Throws ValidationError("NotMinimalRep") if v is not in W^I.
StabilizerData stabilizer_and_reps(const WeylGroup &W, ElemId v, Subset set);

/// Same, for an arbitrary weight.
StabilizerData orbit_stabilizer(const WeylGroup &W, const IntVector &weight, Subset set);

} // namespace wonderk
