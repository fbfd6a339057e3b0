#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace skmono {

using Complex = std::complex<double>;

/// Local singular model on a punctured disk: one row of the singular-model
/// tables, with the analytic data truncated to polynomials.
///
/// Forms (dz/dzeta, dw/dzeta) per kind, with L = log(zeta) and e3 = e^{2pi i/3}:
///   Type1   (1, -(iL + f))                      Type2  zeta^{-1/2} * Type1
///   Type3   ((1-f) zeta^{b-1}, i(1+f) zeta^{b-1})
///   In      (1, n/(2pi i) (L + f))              Instar zeta^{-1/2} * In
///   Istar0  (g zeta^{-1/2}, h zeta^{-1/2})
///   II..IVstar  ((1-f) zeta^{b-1}, u(f) zeta^{b-1}) with u = i(1+f) for
///               III/IIIstar and u = e3(1 - e3 f) for II/IIstar/IV/IVstar.
/// For fractional-power kinds f = zeta^e * poly(zeta) with e in
/// {1/2, 1/3, 2/3} fixed by beta; the stored coefficients are those of the
/// single-valued polynomial factor.
///
/// Every model additionally carries a unit phase (a twist) and a real
/// pair change P acting on the right: the evaluated pair is
/// phase * (dz0, dw0) * P. Both leave the metric untouched.
struct LocalModel {
  enum class Kind {
    Type1, Type2, Type3, In, Instar, Istar0,
    II, IIstar, III, IIIstar, IV, IVstar,
  };

  Kind kind = Kind::Type3;
  int n = 1;                       // In / Instar
  std::pair<int, int> beta_frac{1, 2};  // Type3 only; other kinds fix it
  std::vector<Complex> f;          // polynomial part of f
  std::vector<Complex> g{Complex(1.0, 0.0)};   // Istar0
  std::vector<Complex> h{Complex(0.0, 1.0)};   // Istar0
  Complex phase{1.0, 0.0};
  Eigen::Matrix2d pair_change = Eigen::Matrix2d::Identity();

  /// Cone parameter where defined (Type3 and the elliptic rows; 1/2 for
  /// Type2/Instar/Istar0 whose dz scales like zeta^{-1/2}).
  double beta() const;

  /// Exponent e of the multivalued factor of f (0, 1/2, 1/3 or 2/3).
  double f_exponent() const;

  /// Radius below which the model data is valid (Im(tau) > 0 and the
  /// f-perturbation stays small), capped at 1.
  double domain_radius() const;
};

/// Point on the punctured disk with a tracked branch: zeta = r e^{i theta}
/// with theta accumulated along the continuation path (not reduced mod 2pi).
struct BranchPoint {
  double r = 0.1;
  double theta = 0.0;
};

/// A special-pair sample: the 1-form coefficients at a branch point.
struct PairSample {
  Complex zeta;
  Complex dz, dw;
  BranchPoint branch;
};

PairSample sample_pair(const LocalModel& model, const BranchPoint& p);

/// Kaehler density Im(tau) |dz/dzeta|^2 / 2 at a point (principal branch;
/// the density is single-valued). Throws OutsideDomain, NonPositiveDensity.
double density(const LocalModel& model, Complex zeta);

/// Closed-form density for the f=0 (resp. constant-coefficient) models,
/// used as an independent check of the tau route.
double reference_density(const LocalModel& model, Complex zeta);

/// Monodromy along a counterclockwise circle |zeta| = radius: continues the
/// branch state over `steps` segments and solves the 4-real-unknown system
/// (dz,dw)_end = (dz,dw)_start * A. Requires steps >= 64;
/// |det A - 1| < 1e-8 on success. Throws BranchTrackingFailure.
Eigen::Matrix2d continue_monodromy(const LocalModel& model, double radius,
                                   int steps);

/// Continuation along an arbitrary polyline of nonzero points; per-step
/// argument jumps above pi/2 abort with BranchTrackingFailure.
Eigen::Matrix2d continue_along(const LocalModel& model,
                               const std::vector<Complex>& path);

/// Cone-angle estimate C(r)/L(r): circumference of |zeta| = r over the
/// metric distance from the puncture along a ray. Throws QuadratureFailure.
double cone_angle(const LocalModel& model, double radius);

/// Twist by theta: both forms scaled by e^{i theta}. Density is pointwise
/// unchanged and so is the monodromy.
LocalModel twist(const LocalModel& model, double theta);

struct TwistRelation {
  enum class Status { Related, NotRelated, NotUnique };
  Status status = Status::NotRelated;
  double theta = 0.0;           // mod pi, in [0, pi)
  Eigen::Matrix2d pair_change = Eigen::Matrix2d::Identity();
  double residual = 0.0;
};

/// Least-squares recovery of (theta mod pi, P) with
/// (dz2, dw2) = e^{i theta} (dz1, dw1) P over sampled pair values.
/// Flat models (constant tau) report NotUnique. Throws DegenerateSamples.
TwistRelation recover_twist(const LocalModel& m1, const LocalModel& m2,
                            int samples);

/// Gauss curvature sample: finite-difference Laplacian of -log(Im tau)
/// over 2*density. Nonnegative for these models (the Weil-Petersson sign).
/// Throws StencilOutsideDomain.
double curvature_sample(const LocalModel& model, Complex zeta, double h);

/// JSON: {"kind":"II","f":[[re,im],...]}; In/Instar carry "n", Type3 carries
/// "beta":"p/q", Istar0 carries "g" and "h"; optional "phase":[re,im].
LocalModel model_from_json(const std::string& json_text);
std::string model_to_json(const LocalModel& model);

std::string kind_name(LocalModel::Kind kind);

}  // namespace skmono
