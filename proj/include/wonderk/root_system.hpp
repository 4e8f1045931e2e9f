#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wonderk/lattice.hpp"

namespace wonderk {

enum class Family { A, B, C, D, E, F, G };

/// Type of an irreducible reduced root system, e.g. "A2", "G2", "F4".
struct CartanLabel {
  Family family = Family::A;
  int rank = 1;

  /// Throws ValidationError("InvalidCartanLabel") on bad input.
  static CartanLabel parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const CartanLabel &) const = default;
};

bool is_admissible(Family family, int rank);

/// A root written both in simple-root coordinates and in the fundamental
/// weight basis.
struct Root {
  IntVector simple_coords;
  IntVector weight;
  bool positive() const;
};

/// Cartan data for a simply connected group.  Weights are written in the
/// basis of fundamental weights, coweights in the basis of fundamental
/// coweights, root-lattice characters in the basis of simple roots.
/// The Cartan matrix entry (i, j) is <alpha_i^vee, alpha_j>, so column j is
/// alpha_j in the weight basis and row i is alpha_i^vee in the coweight basis.
class RootSystem {
public:
  RootSystem() = default;
  RootSystem(CartanLabel label, IntMatrix cartan);

  const CartanLabel &label() const { return label_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const IntMatrix &cartan_matrix() const { return cartan_; }

  /// alpha_i (0-based i) in the weight basis.
  const IntVector &simple_root(int i) const { return simple_roots_[i]; }
  /// alpha_i^vee in the coweight basis.
  IntVector simple_coroot(int i) const { return cartan_.row(i); }
  const std::vector<Root> &positive_roots() const { return positive_; }

  /// Converts a root-lattice character (simple-root coordinates) to weights.
  IntVector root_lattice_to_weight(const IntVector &simple_coords) const;

  /// +1 / -1 if `weight` is a positive / negative root, 0 otherwise.
  int root_sign(const IntVector &weight) const;

private:
  CartanLabel label_;
  IntMatrix cartan_;
  std::vector<IntVector> simple_roots_;
  std::vector<Root> positive_;
  std::map<IntVector, int> sign_of_root_;
};

IntMatrix cartan_matrix(const CartanLabel &label);

RootSystem build_root_system(const CartanLabel &label);

/// Number of positive roots for the type, from the classification.
std::size_t expected_positive_root_count(const CartanLabel &label);

} // namespace wonderk
