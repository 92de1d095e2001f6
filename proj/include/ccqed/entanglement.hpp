#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ccqed/hilbert.hpp"
#include "ccqed/spectra.hpp"

namespace ccqed {

/// Subset of the four tensor factors, as a bitmask indexed by Factor.
class FactorSet {
 public:
  constexpr FactorSet() = default;
  constexpr FactorSet(std::initializer_list<Factor> factors) {
    for (Factor f : factors) mask_ |= bit(f);
  }
  static constexpr FactorSet from_mask(unsigned mask) {
    FactorSet s;
    s.mask_ = mask & 0xFu;
    return s;
  }

  constexpr bool contains(Factor f) const { return (mask_ & bit(f)) != 0; }
  constexpr FactorSet complement() const { return from_mask(~mask_); }
  constexpr bool is_proper() const { return mask_ != 0 && mask_ != 0xFu; }
  constexpr unsigned mask() const { return mask_; }
  constexpr bool operator==(const FactorSet&) const = default;

  /// "A1C2"-style label in factor order.
  std::string label() const;

 private:
  static constexpr unsigned bit(Factor f) { return 1u << static_cast<unsigned>(f); }
  unsigned mask_ = 0;
};

/// The five inequivalent bipartitions of the two-site system.
namespace cuts {
inline constexpr FactorSet site{Factor::atom1, Factor::cavity1};
inline constexpr FactorSet atom{Factor::atom1};
inline constexpr FactorSet cavity{Factor::cavity1};
inline constexpr FactorSet atoms{Factor::atom1, Factor::atom2};
inline constexpr FactorSet cross{Factor::atom1, Factor::cavity2};
}  // namespace cuts

/// Upper bounds (bits) in the two-excitation sector. One atom and one cavity
/// nominally span 6 states, but only 5 of them carry <= 2 excitations.
namespace entropy_bounds {
inline const double atom = 1.0;
inline const double cavity = std::log2(3.0);
inline const double atoms = 2.0;
inline const double site = std::log2(5.0);
inline const double cross = std::log2(5.0);
}  // namespace entropy_bounds

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReducedDensityMatrix {
  FactorSet kept;
  Eigen::MatrixXd entries;  // kept factors in row-major factor order
};

/// rho_kept = Tr_traced |psi><psi| for a product-space state of length
/// 4 (cutoff+1)^2. Throws std::domain_error for an improper factor set, a
/// length that is not a two-site product dimension, or a state whose norm
/// differs from 1 by more than 1e-10.
ReducedDensityMatrix reduced_density(const Eigen::VectorXd& full_state, FactorSet kept);

/// -sum p log2 p over eigenvalues of rho. Eigenvalues in [-1e-9, 0) are
/// treated as roundoff and clamped; anything lower, or a trace off by more
/// than 1e-9, raises IntegrityError.
double von_neumann_entropy(const ReducedDensityMatrix& rho);

/// Shannon entropy in bits of a probability vector, 0 log 0 := 0.
double shannon_bits(std::span<const double> probabilities);

/// Same entropy from the singular values of psi reshaped as kept x traced.
double schmidt_entropy(const Eigen::VectorXd& full_state, FactorSet kept);

struct EntropyReport {
  double site = 0.0;    // S(A1C1)
  double atom = 0.0;    // S(A1)
  double cavity = 0.0;  // S(C1)
  double atoms = 0.0;   // S(A1A2) = S(C1C2)
  double cross = 0.0;   // S(A1C2)
  bool degenerate = false;

  /// Every bipartition carries entanglement above `threshold` bits. A
  /// necessary indicator of multipartite entanglement, not a certificate.
  bool all_entangled(double threshold = 1e-6) const {
    return site > threshold && atom > threshold && cavity > threshold && atoms > threshold && cross > threshold;
  }
};

EntropyReport all_bipartite_entropies(const GroundStateResult& ground);

}  // namespace ccqed
