#pragma once

#include <optional>
#include <vector>

#include "arcwalk/graph.hpp"
#include "arcwalk/sign_function.hpp"
#include "arcwalk/types.hpp"

namespace arcwalk {

/// One step of the signed arc walk: U = S (2 d_sigma^* d_sigma - I).
///
/// Always applicable matrix-free in O(|A|) per step; the dense A x A form is
/// materialized only when |A| <= dense_cap.
class WalkOperator {
 public:
  WalkOperator(Graph g, SignFunction s, int dense_cap = kDefaultDenseCap);

  const Graph& graph() const { return graph_; }
  const SignFunction& sign() const { return sign_; }
  int dimension() const { return graph_.arc_count(); }

  /// U * state. ShapeError if the state dimension is not |A|.
  StateVector apply(const StateVector& state) const;

  bool has_dense() const { return dense_.has_value(); }

  /// Dense form; ResourceLimit when |A| exceeded the construction cap.
  const RealMatrix& dense() const;

 private:
  Graph graph_;
  SignFunction sign_;
  std::vector<double> inv_deg_terminus_;  // 1/deg(t(a)) per arc
  std::optional<RealMatrix> dense_;
};

/// Entry (U_sigma)_{a,b} = 2 sigma(a^-1) sigma(b) / deg t(b) * [o(a)=t(b)]
///                         - [a = b^-1].
/// All entries are real. UnknownArc if a or b is not an arc of g.
double evolution_entry(const Graph& g, const SignFunction& s, Arc a, Arc b);

/// Full A x A matrix assembled entry-by-entry from evolution_entry.
/// Independent construction route from WalkOperator::dense().
RealMatrix evolution_matrix_from_entries(const Graph& g, const SignFunction& s);

/// Convenience factory matching the construction U = S(2 d_sigma^* d_sigma - I).
WalkOperator evolution_operator(const Graph& g, const SignFunction& s,
                                int dense_cap = kDefaultDenseCap);

/// Normalized all-ones state j over the arcs.
StateVector uniform_state(const Graph& g);

/// U^steps * state by repeated application (never by matrix powering).
StateVector evolve(const WalkOperator& w, StateVector state, int steps);

/// Success probability at time tau: sum of |(U^tau j)_b|^2 over marked b.
double success_probability(const Graph& g, const SignFunction& s, int tau,
                           int dense_cap = kDefaultDenseCap);

/// Success probabilities for tau = 0..tau_max from one evolution run.
struct SearchTrace {
  std::vector<Arc> marked_arcs;
  std::vector<int> taus;
  std::vector<double> probabilities;
};

SearchTrace probability_trace(const Graph& g, const SignFunction& s,
                              int tau_max, int dense_cap = kDefaultDenseCap);

/// Scalar amplitudes (U_{sigma_a}^tau j)_a for tau = 0..tau_max. These are
/// the quantities that coincide across arcs of one automorphism orbit.
std::vector<Complex> marked_amplitude_trace(const Graph& g, Arc a, int tau_max,
                                            int dense_cap = kDefaultDenseCap);

}  // namespace arcwalk
