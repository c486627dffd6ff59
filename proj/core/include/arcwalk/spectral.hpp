#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcwalk/graph.hpp"
#include "arcwalk/sign_function.hpp"
#include "arcwalk/types.hpp"
#include "arcwalk/walk_operator.hpp"

namespace arcwalk {

/// Discriminant matrix T_sigma = d_sigma S d_sigma^* (V x V, real symmetric,
/// spectral radius <= 1). Computed as the triple product through sparse
/// factors, not from the entrywise formula.
RealMatrix discriminant(const Graph& g, const SignFunction& s);

/// Entrywise form: sigma(x,y) sigma(y,x) / sqrt(deg x * deg y) on edges,
/// 0 otherwise. Independent route from discriminant().
double discriminant_entry(const Graph& g, const SignFunction& s, int x, int y);

/// Eigenpair of U_sigma lifted from a discriminant eigenpair (lambda, f):
/// eigenvalues e^{+-i theta}, theta = arccos(lambda), with eigenvectors
/// phi_{+-} = (d_sigma^* - e^{+-i theta} S d_sigma^*) f / (sqrt(2)|sin theta|).
struct LiftedPair {
  double lambda = 0.0;
  double theta = 0.0;
  Complex value_plus;
  Complex value_minus;
  StateVector phi_plus;
  StateVector phi_minus;
};

/// Requires |lambda| < 1 (DegenerateLift within 1e-12 of 1) and ||f|| = 1.
LiftedPair lift_eigenpair(const Graph& g, const SignFunction& s, double lambda,
                          const RealVector& f);

/// beta_{+-} = (phi_+ +- phi_-)/sqrt(2). beta_+ is real up to rounding and
/// i beta_- = S d_sigma^* f.
std::pair<StateVector, StateVector> beta_vectors(const Graph& g,
                                                 const SignFunction& s,
                                                 double lambda,
                                                 const RealVector& f);

/// t* = floor(pi / (2 arccos lambda)). DegenerateLift if |lambda| >= 1 - 1e-12.
int measurement_time(double lambda);

/// Eigen-decomposition of T_sigma plus every non-degenerate lifted pair.
struct SpectralReport {
  RealVector eigenvalues;  // ascending
  RealMatrix eigenvectors; // columns, matching eigenvalues
  std::vector<LiftedPair> lifted;
  std::optional<double> theta;   // arccos(lambda_max) when lift is possible
  std::optional<int> t_star;
  double max_lift_residual = 0.0;  // max ||U phi - e^{i theta} phi|| over lifted
};

SpectralReport spectral_report(const Graph& g, const SignFunction& s,
                               int dense_cap = kDefaultDenseCap);

/// Reconstruction of U^tau j from the full dense eigendecomposition of U.
/// Independent oracle route against step-by-step evolution.
class EigenReconstruction {
 public:
  EigenReconstruction(const RealMatrix& u_dense, const StateVector& initial);

  /// (U^tau j)_arc without any repeated operator application.
  Complex amplitude(int arc, int tau) const;

  /// Full U^tau j.
  StateVector state(int tau) const;

 private:
  ComplexMatrix vectors_;
  ComplexVector values_;
  ComplexVector coefficients_;
};

}  // namespace arcwalk
