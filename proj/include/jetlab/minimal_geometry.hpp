#ifndef JETLAB_MINIMAL_GEOMETRY_HPP
#define JETLAB_MINIMAL_GEOMETRY_HPP

#include <complex>
#include <vector>

#include "jetlab/nevanlinna.hpp"
#include "jetlab/polynomial.hpp"
#include "jetlab/quadrature.hpp"
#include "jetlab/wronskian.hpp"

namespace jetlab {

// Minimal surface in R^n through Weierstrass-type data phi = df/dz with the
// isothermal condition sum phi_i^2 = 0. The real immersion itself is never
// needed: Gauss map and area density are functions of phi.
struct WeierstrassSurface {
  int n = 3;
  std::vector<RationalFn> phi;
  double admissible_radius = 0.95;
};

// Exact symbolic verdict on sum phi_i^2 = 0.
bool verify_conformality(const WeierstrassSurface& s);

// Named presets.
WeierstrassSurface plane_surface();
WeierstrassSurface enneper_surface();
// The classical generator (F, G) -> (F(1-G^2)/2, iF(1+G^2)/2, FG); conformal
// by construction for any rational F, G.
WeierstrassSurface weierstrass_surface(const RationalFn& f, const RationalFn& g,
                                       double admissible_radius = 0.95);

// Gauss map [phi_1 : ... : phi_n] as a reduced projective curve. Constant
// exactly when the surface is flat.
ProjectiveCurve gauss_map(const WeierstrassSurface& s);

// Max over samples of a central-difference estimate of |d/dz-bar| of the
// affine chart of the curve. Near zero for holomorphic data.
double holomorphy_residual(const ProjectiveCurve& g,
                           const std::vector<std::complex<double>>& samples,
                           double step = 1e-5);

// Negative control: same estimate with one component conjugated.
double holomorphy_residual_conjugated(const ProjectiveCurve& g, int conjugated_component,
                                      const std::vector<std::complex<double>>& samples,
                                      double step = 1e-5);

enum class NormKind { Euclidean, Max };

// Density of the induced area form dsigma = 2 |phi|^2 du dv, with either
// norm; the two differ pointwise by a factor in [1, n], so convergence
// verdicts agree.
double area_form_density(const WeierstrassSurface& s, const std::complex<double>& z,
                         NormKind norm);

enum class HModel { One, InvOneMinusZ };

// Partial integrals of h^p against the plane surface's area form over discs
// of radius 1-eps. Model One stays bounded (the flat disc is incomplete);
// InvOneMinusZ with p = 2 grows without bound.
std::vector<double> yau_partial_integrals(double p_exponent, HModel h,
                                          const std::vector<double>& eps_grid,
                                          const QuadratureOptions& opts = {});

// The integral closing the main argument:
//   integral_0^(1-eps) r (1-r)^(-ratio) (log 1/(1-r))^ratio dr.
// Converging for ratio < 1 (the twist condition 2m < m-tilde), diverging
// for ratio >= 1.
struct ProofIntegral {
  enum class Verdict { Converging, Diverging };
  std::vector<double> partial_values;  // one per requested eps
  Verdict verdict;
  double tail_bound;  // geometric-tail certificate; 0 when diverging
};

ProofIntegral proof_integral_convergence(double ratio, const std::vector<double>& eps_grid,
                                         const QuadratureOptions& opts = {});

// Circle integrals of |P(j_n(f))|^(2/m~) |f|^2 normalized by the claimed
// bound (1-r)^(-2m/m~) (log 1/(1-r))^(2m/m~). P is the Wronskian
// differential evaluated in the affine chart of the reduced representation.
// Requires m~ > 2m.
std::vector<double> jet_norm_circle_ratios(const WronskianDifferential& w,
                                           const ProjectiveCurve& f,
                                           const std::vector<double>& r_grid,
                                           const QuadratureOptions& opts = {});

}  // namespace jetlab

#endif
