#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nuq/exact.hpp"
#include "nuq/model.hpp"

namespace nuq {

struct TrotterPlan {
  double dt = 0.5;
  int steps = 10;
  std::vector<std::pair<int, int>> pair_order;

  /// Pairs (q, k), q < k, in lexicographic order.
  static TrotterPlan lexicographic(int n, double dt, int steps);
  /// dt > 0, steps >= 0, pair_order a permutation of all q < k pairs.
  void validate(int n) const;
};

/// Commutator-norm constants of the first-order split
/// exp(-iHt) ~ exp(-i H1 t) prod_K exp(-i A_K t).
struct BoundReport {
  double c12_tight = 0;      // (4|B3| + 2 sqrt3 |B8|) sum_{q<k} J_qk |w_k - w_q|
  double c12_loose = 0;      // 2 mu N max|w_k - w_q|
  double c22_sum = 0;        // 4 sqrt3 sum_{q<k} J_qk sum_l |J_lq - J_lk|
  double c22_simple = 0;     // sqrt3 mu^2 N max|cos_lq - cos_lk|
  double c22_ordered = 0;    // respects which pairs follow K in the product
  double delta_omega_max = 0;
  double delta_theta_max = 0;
  double mu = 0;
  int n = 0;
  std::vector<std::string> notes;

  /// t^2 / (2r) (c12_tight + c22_ordered); valid for any pair order.
  double total_bound(double t, int r) const;
  /// t^2 / (2r) mu N (2 dw + sqrt3 mu dtheta), the closed form behind r_for.
  double closed_form_bound(double t, int r) const;
  /// ceil((t^2 / 2 eps) mu N (2 dw + sqrt3 mu dtheta)), at least 1.
  int r_for(double t, double eps) const;
};

BoundReport bound_report(const OscillationParams& p, const TrotterPlan& plan);
BoundReport bound_report(const OscillationParams& p);

int steps_for_error(double t, double epsilon, const OscillationParams& p);
/// Same formula from the summary quantities.
int steps_for_error(double t, double epsilon, double mu, int n, double delta_omega_max, double delta_theta_max);

/// One first-order step: one-body factor first, then each pair factor in
/// plan order. Dense, exact exponentials of every factor.
Matrix trotter_step_unitary(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan);

/// Trajectory at step boundaries 0..steps.
EvolutionResult trotter_evolve_dense(const OscillationParams& p, const TrotterPlan& plan, const Encoding& enc,
                                     const Vector& psi0);

/// Trotter run from a flavor product state with the flavor table attached.
EvolutionResult trotter_run(const OscillationParams& p, const TrotterPlan& plan, const Encoding& enc,
                            const std::vector<int>& flavors);

/// Dense commutator norms the bounds are meant to dominate.
double c12_dense(const OscillationParams& p, const Encoding& enc);
/// || sum_K [A_K, sum_{M after K} A_M] || summed over K (triangle form).
double c22_dense(const OscillationParams& p, const Encoding& enc, const TrotterPlan& plan);

}  // namespace nuq
