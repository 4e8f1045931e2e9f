#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wonderk/laurent.hpp"
#include "wonderk/weyl_group.hpp"

namespace wonderk {

struct SteinbergElement;

namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t inverse(std::uint64_t a);
std::uint64_t reduce(const Integer &x);
/// Symmetric lift to (-p/2, p/2].
Integer lift(std::uint64_t x);

} // namespace modp

/// Dominant representative of the W-orbit of a weight.
IntVector dominant_of(const RootSystem &rs, IntVector weight);
/// All dominant weights mu <= nu (nu dominant) in the dominance order.
std::vector<IntVector> dominant_below(const RootSystem &rs, const IntVector &nu);
/// Orbit sum m_mu as a one-block polynomial.
LaurentPoly orbit_sum(const WeylGroup &W, const IntVector &mu);

/// Expansion of g in {f_v} by solving g = sum x_{v,mu} m_mu f_v for integers
/// x on a bounded candidate set (mu dominant, bounded in dominance order by
/// the dominant weights of g).  The solve runs modulo a 61-bit prime on a
/// cached elimination per root-lattice coset; the result is lifted
/// symmetrically.  The caller must verify the recombination.  Not thread-safe.
class SupportExpansion {
public:
  SupportExpansion(const WeylGroup &W, const std::vector<SteinbergElement> &basis);

  std::vector<LaurentPoly> expand(const LaurentPoly &g);

private:
  struct Column {
    ElemId v;
    IntVector mu;
  };
  struct CosetSystem {
    std::vector<IntVector> seeds;
    std::vector<Column> columns;
    std::map<Exponent, std::size_t> rows;
    std::vector<std::size_t> pivot_row; // per column; npos when no pivot
    std::vector<std::uint64_t> pivot_inv;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> ops;
  };

  IntVector coset_key(const IntVector &weight) const;
  void rebuild(CosetSystem &sys) const;
  bool solve(const CosetSystem &sys, const LaurentPoly &g,
             std::vector<std::vector<Term>> &out) const;

  const WeylGroup &W_;
  const std::vector<SteinbergElement> &basis_;
  std::vector<IntVector> basis_dominant_;
  IntVector theta_;
  std::map<IntVector, CosetSystem> systems_;
};

} // namespace wonderk
