#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qd/deform.hpp"
#include "qd/diagram.hpp"
#include "qd/hypersurface.hpp"

namespace qd {

/// A bundled example: a system plus named deformation data over it.
struct Fixture {
  std::string name;
  ReductionSystem system;
  std::vector<std::pair<std::string, DeformationMap>> families;
  std::optional<CoverSpec> cover;
  std::optional<BuiltDiagram> diagram;
  std::optional<HypersurfacePresentation> hypersurface;

  const DeformationMap& family(const std::string& name) const;
};

/// zk-tilt-K, zk-diagram-K, genus3, hypersurface-N, preprojective-A1.
Fixture fixture(const std::string& name);
/// Name patterns, for help text.
std::vector<std::string> fixture_patterns();

/// Two vertices 0, 1; arrows x0, x1: 0 -> 1 and y0..y(k-1): 1 -> 0.
ReductionSystem zk_tilt_system(int k);
DeformationMap zk_alpha(const ReductionSystem& r, int k, int i);
DeformationMap zk_beta(const ReductionSystem& r, int k, int l);
DeformationMap zk_beta_symp(const ReductionSystem& r);
/// sum of alpha_j t_j.
DeformationMap zk_alpha_family(const ReductionSystem& r, int k);
/// beta0 t0 + beta1 t1 + beta2 t2.
DeformationMap zk_beta012(const ReductionSystem& r, int k);
/// The higher-order correction of beta012, truncated at 2k.
DeformationMap zk_corrected(const ReductionSystem& r, int k);
/// mu0 beta0 + mu1 beta1 + sum lambda_j alpha_j.
DeformationMap zk_variety_family(const ReductionSystem& r, int k);
/// mu2 beta1.
DeformationMap zk_q_corner(const ReductionSystem& r, int k);

DeformationMap zk_diagram_commutative(const BuiltDiagram& d, int k);
/// alpha(z) = t1' + z t2' and the matching beta, truncated at `n`.
DeformationMap zk_diagram_noncommutative(const BuiltDiagram& d, int n = 6);
/// t1' = 0, t2' = h, truncated at `n`.
DeformationMap zk_diagram_q(const BuiltDiagram& d, int n = 6);
/// Commutative and noncommutative parameters together, truncated at `n`.
DeformationMap zk_diagram_combined(const BuiltDiagram& d, int k, int n = 2);

/// Six-parameter family on the curve charts. With `literal` the w^4 and u^4
/// values use x^3 w and z^3 u for the fourth parameter.
DeformationMap genus3_family(const BuiltDiagram& d, bool literal = false);

/// f = x3^n - x1 x2.
HypersurfacePresentation singular_hypersurface(int n);
/// Weights x1 = x2 = n, x3 = 2 ahead of length; certifies the system and
/// puts the example deformation below its lhs.
AdmissibleOrder singular_hypersurface_order(const Quiver& q, int n);
DeformationMap singular_hypersurface_phi(const ReductionSystem& r, int n);

}  // namespace qd
