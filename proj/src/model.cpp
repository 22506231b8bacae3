#include "nuq/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nuq/errors.hpp"
#include "nuq/su3.hpp"

namespace nuq {

Mixing Mixing::from_degrees(double t12, double t13, double t23, double dcp) {
  constexpr double k = std::numbers::pi / 180.0;
  return Mixing{t12 * k, t13 * k, t23 * k, dcp * k};
}

RealMatrix OscillationParams::default_pair_cos(std::size_t n) {
  return RealMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

void OscillationParams::validate(double b_norm_tol) const {
  const std::size_t n = omegas.size();
  if (n == 0) throw DomainError("params: need at least one neutrino");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("params: mu must be finite and >= 0");
  for (double w : omegas)
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("params: omegas must be finite and > 0");
  const double bn = std::hypot(b3, b8);
  if (!std::isfinite(bn) || std::abs(bn - 1.0) > b_norm_tol)
    throw DomainError("params: |(b3, b8)| = " + std::to_string(bn) + " is not 1");
  for (double a : {mixing.theta12, mixing.theta13, mixing.theta23, mixing.delta_cp})
    if (!std::isfinite(a)) throw DomainError("params: mixing angles must be finite");
  if (pair_cos.rows() != static_cast<Eigen::Index>(n) || pair_cos.cols() != pair_cos.rows())
    throw DomainError("params: pair_cos must be N x N");
  for (Eigen::Index i = 0; i < pair_cos.rows(); ++i) {
    if (std::abs(pair_cos(i, i) - 1.0) > 1e-12) throw DomainError("params: pair_cos diagonal must be 1");
    for (Eigen::Index j = 0; j < pair_cos.cols(); ++j) {
      if (std::abs(pair_cos(i, j)) > 1.0 + 1e-12) throw DomainError("params: |pair_cos| must be <= 1");
      if (std::abs(pair_cos(i, j) - pair_cos(j, i)) > 1e-12)
        throw DomainError("params: pair_cos must be symmetric");
    }
  }
}

OscillationParams params_from_masses(double delta12, double delta13, double delta23,
                                     const std::vector<double>& momenta, double mu,
                                     const Mixing& mixing, RealMatrix pair_cos) {
  const double scale = std::max({std::abs(delta12), std::abs(delta13), std::abs(delta23)});
  if (std::abs(delta23 - (delta13 - delta12)) > 1e-12 * scale)
    throw DomainError("params_from_masses: delta23 != delta13 - delta12");
  const double sum = delta13 + delta23;
  const double norm = std::sqrt(delta12 * delta12 + sum * sum / 3.0);
  if (!(norm > 0.0)) throw DomainError("params_from_masses: all mass splittings vanish");
  if (momenta.empty()) throw DomainError("params_from_masses: no momenta");

  OscillationParams p;
  p.mu = mu;
  for (double k : momenta) {
    if (!(k > 0.0)) throw DomainError("params_from_masses: momenta must be > 0");
    p.omegas.push_back(norm / (4.0 * k));
  }
  p.b3 = delta12 / norm;
  p.b8 = sum / std::sqrt(3.0 * delta12 * delta12 + sum * sum);
  p.mixing = mixing;
  p.pair_cos = pair_cos.size() == 0 ? OscillationParams::default_pair_cos(momenta.size()) : std::move(pair_cos);
  p.validate(1e-12);
  return p;
}

double coupling(std::size_t q, std::size_t k, const OscillationParams& p) {
  const std::size_t n = p.size();
  if (q == k) throw DomainError("coupling: q == k");
  if (q >= n || k >= n) throw DomainError("coupling: index out of range");
  return p.mu * (1.0 - p.pair_cos(q, k)) / (2.0 * static_cast<double>(n));
}

Matrix pmns_matrix(const Mixing& m) {
  const double c12 = std::cos(m.theta12), s12 = std::sin(m.theta12);
  const double c13 = std::cos(m.theta13), s13 = std::sin(m.theta13);
  const double c23 = std::cos(m.theta23), s23 = std::sin(m.theta23);
  const cplx ph = std::exp(-kI * m.delta_cp);
  Matrix r23(3, 3), r13(3, 3), r12(3, 3);
  r23 << 1, 0, 0, 0, c23, s23, 0, -s23, c23;
  r13 << c13, 0, s13 * ph, 0, 1, 0, -s13 * std::conj(ph), 0, c13;
  r12 << c12, s12, 0, -s12, c12, 0, 0, 0, 1;
  return r23 * r13 * r12;
}

Dims Encoding::register_dims() const {
  if (kind == EncodingKind::Qutrit) return Dims(n, 3);
  return Dims(2 * n, 2);
}

std::size_t Encoding::dim() const {
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) d *= site_dim();
  return d;
}

std::vector<int> Encoding::site_wires(int q) const {
  if (kind == EncodingKind::Qutrit) return {q};
  return {2 * q, 2 * q + 1};
}

std::size_t Encoding::basis_index(const std::vector<int>& slots) const {
  if (static_cast<int>(slots.size()) != n) throw DomainError("basis_index: wrong number of sites");
  std::size_t idx = 0;
  for (int s : slots) {
    if (s < 0 || s > 2) throw DomainError("basis_index: slot outside 0..2");
    idx = idx * site_dim() + slot_code(s);
  }
  return idx;
}

bool Encoding::slots_of(std::size_t index, std::vector<int>& slots) const {
  slots.assign(n, 0);
  bool physical = true;
  const std::size_t d = site_dim();
  for (int q = n; q-- > 0;) {
    const int code = static_cast<int>(index % d);
    index /= d;
    if (kind == EncodingKind::QubitPair) {
      if (code == 0) physical = false;
      slots[q] = code - 1;
    } else {
      slots[q] = code;
    }
  }
  return physical;
}

std::vector<std::size_t> Encoding::physical_indices() const {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  std::vector<std::size_t> out(count);
  std::vector<int> slots(n);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t r = i;
    for (int q = n; q-- > 0;) {
      slots[q] = static_cast<int>(r % 3);
      r /= 3;
    }
    out[i] = basis_index(slots);
  }
  return out;
}

std::string to_string(EncodingKind k) { return k == EncodingKind::Qutrit ? "qutrit" : "qubitpair"; }

EncodingKind encoding_from_string(const std::string& s) {
  if (s == "qutrit") return EncodingKind::Qutrit;
  if (s == "qubitpair" || s == "qubit") return EncodingKind::QubitPair;
  throw DomainError("unknown encoding '" + s + "'");
}

const std::array<Matrix, 8>& site_generators(EncodingKind k) {
  static const std::array<Matrix, 8> lam = su3::gell_mann_all();
  static const std::array<Matrix, 8> q = su3::qubit_generators_all();
  return k == EncodingKind::Qutrit ? lam : q;
}

void check_dense_cap(const Encoding& enc) {
  const int cap = enc.kind == EncodingKind::Qutrit ? 8 : 6;
  if (enc.n > cap)
    throw CapError("dense build limited to N <= " + std::to_string(cap) + " for " + to_string(enc.kind) +
                   " encoding (got N = " + std::to_string(enc.n) + ")");
}

Matrix one_body_local(const OscillationParams& p, EncodingKind k) {
  const auto& g = site_generators(k);
  return p.b3 * g[2] + p.b8 * g[7];
}

Matrix pair_local(EncodingKind k) { return su3::casimir_pair(site_generators(k)); }

Matrix hamiltonian_dense(const OscillationParams& p, const Encoding& enc, HamiltonianPart part) {
  check_dense_cap(enc);
  if (static_cast<int>(p.size()) != enc.n) throw DomainError("hamiltonian_dense: params and encoding disagree on N");
  const Dims dims = enc.register_dims();
  const std::size_t d = enc.dim();
  Matrix h = Matrix::Zero(d, d);
  if (part != HamiltonianPart::TwoBody) {
    const Matrix one = one_body_local(p, enc.kind);
    for (int q = 0; q < enc.n; ++q) embed_add(h, one, enc.site_wires(q), dims, p.omegas[q]);
  }
  if (part != HamiltonianPart::OneBody) {
    const Matrix two = pair_local(enc.kind);
    for (int q = 0; q < enc.n; ++q)
      for (int k = q + 1; k < enc.n; ++k) {
        const double j = coupling(q, k, p);
        if (j == 0.0) continue;
        auto wires = enc.site_wires(q);
        for (int w : enc.site_wires(k)) wires.push_back(w);
        embed_add(h, two, wires, dims, j);
      }
  }
  if (enc.kind == EncodingKind::QubitPair && enc.n > 1) {
    // One-body terms still act on the other sites when one pair sits in |00>.
    // Drop those rows and columns so the unphysical sector carries no dynamics.
    std::vector<int> slots;
    for (std::size_t i = 0; i < d; ++i)
      if (!enc.slots_of(i, slots)) {
        h.row(static_cast<Eigen::Index>(i)).setZero();
        h.col(static_cast<Eigen::Index>(i)).setZero();
      }
  }
  return h;
}

Matrix pair_term_dense(const OscillationParams& p, const Encoding& enc, int q, int k) {
  check_dense_cap(enc);
  auto wires = enc.site_wires(q);
  for (int w : enc.site_wires(k)) wires.push_back(w);
  const std::size_t d = enc.dim();
  Matrix h = Matrix::Zero(d, d);
  embed_add(h, pair_local(enc.kind), wires, enc.register_dims(), coupling(q, k, p));
  return h;
}

const std::array<std::string, 3>& flavor_names() {
  static const std::array<std::string, 3> names{"e", "mu", "tau"};
  return names;
}

std::vector<int> parse_flavor_string(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    const auto& names = flavor_names();
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw DomainError("unknown flavor '" + tok + "' (expected e, mu or tau)");
    out.push_back(static_cast<int>(it - names.begin()));
  }
  if (out.empty()) throw DomainError("empty flavor string");
  return out;
}

std::string flavor_label(const std::vector<int>& slots) {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ',';
    out += flavor_names().at(slots[i]);
  }
  return out;
}

std::string flavor_label(std::size_t index, int n) {
  std::vector<int> slots(n);
  for (int q = n; q-- > 0;) {
    slots[q] = static_cast<int>(index % 3);
    index /= 3;
  }
  return flavor_label(slots);
}

}  // namespace nuq
