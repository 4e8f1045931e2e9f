#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "wonderk/lattice.hpp"
#include "wonderk/weyl_group.hpp"

namespace wonderk {

using Exponent = boost::container::small_vector<std::int32_t, 8>;

Exponent to_exponent(std::span<const std::int64_t> v);
IntVector to_int_vector(const Exponent &e);

struct Term {
  Exponent exp;
  Integer coef;
};

/// Element of Z[Lambda] (one block) or Z[Lambda] (x) Z[Lambda] (two blocks).
/// Exponents have length rank * blocks; the first block is the "u" variable,
/// the second the "v" variable.  Terms are kept sorted lexicographically by
/// exponent with no zero coefficients, so equality is structural.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int rank, int blocks) : rank_(rank), blocks_(blocks) {}

  static LaurentPoly constant(int rank, int blocks, const Integer &c);
  static LaurentPoly monomial(int rank, int blocks, Exponent exp, const Integer &c = 1);
  static LaurentPoly monomial(int rank, int blocks, std::span<const std::int64_t> exp,
                              const Integer &c = 1);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(int rank, int blocks, std::vector<Term> terms);

  int rank() const { return rank_; }
  int blocks() const { return blocks_; }
  int width() const { return rank_ * blocks_; }

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term &leading_term() const { return terms_.back(); }
  Integer coefficient(const Exponent &exp) const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &other);
  LaurentPoly &operator-=(const LaurentPoly &other);
  LaurentPoly &operator*=(const LaurentPoly &other);
  LaurentPoly &operator*=(const Integer &c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer &c) { return a *= c; }
  friend LaurentPoly operator*(const Integer &c, LaurentPoly a) { return a *= c; }

  /// Multiplies by the monomial e^shift.
  LaurentPoly shifted(const Exponent &shift) const;

  /// Exact quotient this / d, or nullopt if d does not divide this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly &d) const;
  /// Divides every coefficient by c; nullopt unless all divisions are exact.
  std::optional<LaurentPoly> divide_exact(const Integer &c) const;

  bool operator==(const LaurentPoly &other) const;

  std::string to_string() const;

private:
  void check_compatible(const LaurentPoly &other) const;

  int rank_ = 0;
  int blocks_ = 1;
  std::vector<Term> terms_;
};

enum class Block { First, Second, Diagonal };

/// w(e^lambda) = e^{w(lambda)} on the chosen block(s).
LaurentPoly weyl_act(const WeylGroup &W, ElemId w, const LaurentPoly &f, Block block);
/// (u, v) acting on the two blocks of a two-block polynomial.
LaurentPoly weyl_act_pair(const WeylGroup &W, ElemId u, ElemId v, const LaurentPoly &f);

bool is_invariant(const WeylGroup &W, const LaurentPoly &f, const std::vector<ElemId> &gens,
                  Block block);
/// Invariance under all simple reflections.
bool is_w_invariant(const WeylGroup &W, const LaurentPoly &f, Block block = Block::First);

/// True iff h lies in the ideal generated by 1 - e^{-chi}; chi has full width.
/// The ideal is the kernel of Z[L] -> Z[L / Z chi], so h is tested by summing
/// coefficients over the classes of L / Z chi.
bool in_character_ideal(const LaurentPoly &h, std::span<const std::int64_t> chi);

/// f == g mod (1 - e^{-chi}) where chi is a weight of length rank placed in
/// the given block ((chi, 0), (0, chi) or (chi, chi)).
bool congruent_mod_character(const LaurentPoly &f, const LaurentPoly &g,
                             std::span<const std::int64_t> chi, Block block = Block::First);

Integer augmentation(const LaurentPoly &f);

LaurentPoly tensor(const LaurentPoly &f, const LaurentPoly &g);

/// 1 - e^{-lambda} in the given block of a `blocks`-block ring.
LaurentPoly one_minus_exp(int rank, int blocks, std::span<const std::int64_t> lambda,
                          Block block = Block::First);

/// Specializes the other tensor factor at e^lambda -> 1; the result is a
/// one-block polynomial in the variables of `keep`.
LaurentPoly collapse_block(const LaurentPoly &f, Block keep);

/// Groups a two-block polynomial by first-block monomial:
/// f = sum_mu e^{(mu,0)} * (1 (x) g_mu).  Returns (mu, g_mu) sorted by mu.
std::vector<std::pair<Exponent, LaurentPoly>> split_by_first_block(const LaurentPoly &f);

} // namespace wonderk
