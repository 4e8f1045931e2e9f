#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wonderk/laurent.hpp"
#include "wonderk/weyl_group.hpp"

namespace wonderk {

/// A cone is a sorted list of ray indices into its fan.
using ConeRays = std::vector<std::size_t>;

/// Simplicial fan in the coweight lattice (fundamental-coweight
/// coordinates).  Cones are stored face-closed, sorted by (dimension, rays);
/// index 0 is always the zero cone.
class Fan {
public:
  Fan() = default;
  /// No validation beyond index ranges; faces of the given cones are added.
  Fan(int dim, std::vector<IntVector> rays, const std::vector<ConeRays> &cones);

  int dim() const { return dim_; }
  const std::vector<IntVector> &rays() const { return rays_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<ConeRays> &cones() const { return cones_; }
  const ConeRays &cone(std::size_t index) const { return cones_[index]; }

  std::optional<std::size_t> find_cone(const ConeRays &rays) const;
  std::optional<std::size_t> find_ray(const IntVector &ray) const;
  /// Cones of full dimension.
  std::vector<std::size_t> maximal_cones() const;
  bool is_face(std::size_t tau, std::size_t sigma) const;
  /// The cone spanned by tau and sigma, if it belongs to the fan.
  std::optional<std::size_t> join(std::size_t tau, std::size_t sigma) const;

  std::string cone_name(std::size_t index) const; // "{0,2}"

private:
  int dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<ConeRays> cones_;
  std::map<ConeRays, std::size_t> index_;
};

/// A positive fan F_+ together with its W-translate F = W F_+ and the action
/// of W on the rays of F.  The rays of F_+ come first in F with the same
/// indices, and the cones of F_+ are a fundamental domain for W on F.
struct WFan {
  WeylGroupPtr W;
  Fan plus;
  Fan full;
  std::vector<std::vector<std::size_t>> ray_action; // [w][ray of F]
  std::vector<std::size_t> plus_to_full;            // cone index in F of each cone of F_+

  std::size_t act_on_cone(ElemId w, std::size_t cone) const; // cone of F
  /// The cone of F_+ in the W-orbit of a cone of F.
  std::size_t orbit_representative(std::size_t cone) const;
};

/// Faces of the positive chamber cone(omega_1^vee, ..., omega_r^vee).
Fan positive_chamber(int rank);
WFan make_wfan(WeylGroupPtr W, Fan plus);
/// The Weyl-chamber fan and its positive part.
WFan chamber_fan(WeylGroupPtr W);

/// Validates a user subdivision of the positive chamber.  Errors:
/// NotFaceClosed, NotSmooth, SupportMismatch (ValidationError).
Fan subdivided_positive_fan(int rank, const std::vector<IntVector> &rays,
                            const std::vector<ConeRays> &cones);

struct ConeStabilizer {
  std::vector<ElemId> setwise;
  bool pointwise = false;
};
/// W_tau for a cone of the full fan.  Throws ValidationError("ConeNotInFan").
ConeStabilizer cone_stabilizer(const WFan &F, const ConeRays &cone);

// ---- Stanley-Reisner presentation -------------------------------------
// Elements of the Laurent ring in X_1..X_d (one variable per ray of the fan)
// are LaurentPoly values of "rank" d.  Modulo the ideal generated by
// X_F = prod_{j in F} (1 - X_j), F not a cone, the ring is the direct sum of
// C_tau = X_tau Z[X_j^{+-1} : j in tau] over the cones tau.

/// Components c_tau (keyed by cone index; zero components omitted).
std::map<std::size_t, LaurentPoly> c_tau_decompose(const Fan &fan, const LaurentPoly &e);
/// Canonical representative: the sum of the C_tau components.
LaurentPoly sr_normal_form(const Fan &fan, const LaurentPoly &e);
/// Whether a polynomial lies in C_tau (multiple of X_tau, variables in tau).
bool in_c_tau(const Fan &fan, std::size_t tau, const LaurentPoly &p);
/// X_tau = prod_{j in tau} (1 - X_j).
LaurentPoly x_tau(const Fan &fan, std::size_t tau);
/// w . X_j = X_{w(j)} on the full fan.
LaurentPoly act_on_sr(const WFan &F, ElemId w, const LaurentPoly &e);

/// Localization of an SR element of F_+ at the fixed point of a maximal cone:
/// X_j -> e^{u_j} with (u_j) the dual basis of the cone's rays, X_j -> 1 for
/// rays outside the cone.  Result is a weight-lattice polynomial.
LaurentPoly restrict_to_fixed_point(const RootSystem &rs, const Fan &fan, std::size_t sigma,
                                    const LaurentPoly &e);

/// Primitive root-lattice character vanishing on the common facet of two
/// adjacent maximal cones, in the weight basis, positive on the ray of the
/// first cone outside the facet.
IntVector facet_character(const RootSystem &rs, const Fan &fan, std::size_t sigma,
                          std::size_t sigma2);
/// Pairs of maximal cones sharing a facet, sigma < sigma2.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(const Fan &fan);

/// a_sigma == a_sigma' mod (1 - e^{-chi}) across every shared facet.
/// Throws ValidationError("MissingCone") if a maximal cone has no value.
bool localization_check(const RootSystem &rs, const Fan &fan,
                        const std::map<std::size_t, LaurentPoly> &family);

} // namespace wonderk
