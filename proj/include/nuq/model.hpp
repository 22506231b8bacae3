#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nuq/linalg.hpp"

namespace nuq {

/// Mixing angles and CP phase, radians.
struct Mixing {
  double theta12 = 0.0;
  double theta13 = 0.0;
  double theta23 = 0.0;
  double delta_cp = 0.0;

  static Mixing from_degrees(double t12, double t13, double t23, double dcp);
};

/// Physical inputs of the forward-scattering model. Frequencies are in units
/// of mu, times in units of 1/mu.
struct OscillationParams {
  double mu = 1.0;
  std::vector<double> omegas;
  double b3 = 0.0;
  double b8 = 1.0;
  Mixing mixing;
  RealMatrix pair_cos;  // symmetric, unit diagonal

  std::size_t size() const { return omegas.size(); }

  /// Throws DomainError on violated invariants. |B| must be 1 within
  /// `b_norm_tol`.
  void validate(double b_norm_tol = 1e-3) const;

  /// pair_cos with 0 off the diagonal (J_qk = mu / 2N).
  static RealMatrix default_pair_cos(std::size_t n);
};

/// Build parameters from mass-squared differences and momenta.
/// Requires delta23 == delta13 - delta12 to 1e-12 relative.
OscillationParams params_from_masses(double delta12, double delta13, double delta23,
                                     const std::vector<double>& momenta, double mu,
                                     const Mixing& mixing, RealMatrix pair_cos = {});

/// J_qk = mu (1 - cos theta_qk) / (2N).
double coupling(std::size_t q, std::size_t k, const OscillationParams& p);

/// U_PMNS = R23 * R13(delta) * R12. Column i is the mass state nu_i written
/// in the flavor basis (e, mu, tau).
Matrix pmns_matrix(const Mixing& m);

enum class EncodingKind { Qutrit, QubitPair };

struct Encoding {
  EncodingKind kind = EncodingKind::Qutrit;
  int n = 0;

  Encoding() = default;
  Encoding(EncodingKind k, int neutrinos) : kind(k), n(neutrinos) {}

  int wires_per_site() const { return kind == EncodingKind::Qutrit ? 1 : 2; }
  /// Local dimension of one neutrino (3 or 4).
  int site_dim() const { return kind == EncodingKind::Qutrit ? 3 : 4; }
  Dims register_dims() const;
  std::size_t dim() const;
  /// Wires holding neutrino q.
  std::vector<int> site_wires(int q) const;
  /// Local basis index of flavor/mass slot s in {0,1,2}: s (qutrit) or s+1 (qubit pair).
  int slot_code(int slot) const { return kind == EncodingKind::Qutrit ? slot : slot + 1; }

  /// Register index of the product state with the given per-site slots.
  std::size_t basis_index(const std::vector<int>& slots) const;
  /// Per-site slots of a register index. False if some site sits in |00>.
  bool slots_of(std::size_t index, std::vector<int>& slots) const;

  /// Register indices of physical states, ordered like the 3^N slot strings.
  std::vector<std::size_t> physical_indices() const;
};

std::string to_string(EncodingKind k);
EncodingKind encoding_from_string(const std::string& s);

/// Eight generators for one site: lambda_i (qutrit) or Q_i (qubit pair).
const std::array<Matrix, 8>& site_generators(EncodingKind k);

enum class HamiltonianPart { OneBody, TwoBody, Full };

/// Caps on dense builds: N <= 8 qutrits, N <= 6 qubit pairs.
void check_dense_cap(const Encoding& enc);

/// One-site operator omega (B3 g3 + B8 g8), without omega.
Matrix one_body_local(const OscillationParams& p, EncodingKind k);
/// sum_a g_a (x) g_a on two sites.
Matrix pair_local(EncodingKind k);

/// Qubit-pair builds vanish on every row and column that has a pair in |00>.
Matrix hamiltonian_dense(const OscillationParams& p, const Encoding& enc, HamiltonianPart part);

/// J_qk sum_a g_a^q g_a^k embedded into the full register.
Matrix pair_term_dense(const OscillationParams& p, const Encoding& enc, int q, int k);

/// Flavor names used in labels.
const std::array<std::string, 3>& flavor_names();
/// Parse "e,mu" into slots {0,1}; throws DomainError naming the token.
std::vector<int> parse_flavor_string(const std::string& s);
std::string flavor_label(const std::vector<int>& slots);
/// Label of the i-th state in the 3^N ordering.
std::string flavor_label(std::size_t index, int n);

}  // namespace nuq
