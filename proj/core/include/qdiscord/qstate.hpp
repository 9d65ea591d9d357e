#pragma once

#include <array>

#include <Eigen/Core>

namespace qdiscord {

/// Two-qubit density matrix with nonzero entries only on the diagonal and
/// anti-diagonal, all real:
///
///     | a  0  0  eps |
///     | 0  b  dl 0   |
///     | 0  dl c  0   |
///     | eps 0 0  d   |
///
/// Instances are always valid: unit trace, nonnegative populations and
/// positive semidefinite 2x2 blocks (a*d >= eps^2, b*c >= dl^2).
class XState {
 public:
  /// Tolerance on |a+b+c+d - 1| for raw inputs. Accepted inputs are divided by
  /// their trace.
  static constexpr double kInputTraceTol = 1e-9;
  /// Tolerance on populations and on the block determinants.
  static constexpr double kPositivityTol = 1e-12;

  /// Throws DomainError for non-finite input, TraceError for a bad trace and
  /// PositivityError for a non-physical state.
  static XState from_entries(double a, double b, double c, double d, double eps,
                             double delta);

  static XState maximally_mixed() { return from_entries(0.25, 0.25, 0.25, 0.25, 0, 0); }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  /// |00><11| coherence.
  double eps() const noexcept { return eps_; }
  /// |01><10| coherence.
  double delta() const noexcept { return delta_; }

  friend bool operator==(const XState&, const XState&) = default;

 private:
  XState(double a, double b, double c, double d, double eps, double delta)
      : a_(a), b_(b), c_(c), d_(d), eps_(eps), delta_(delta) {}

  double a_, b_, c_, d_, eps_, delta_;
};

/// Pauli-basis coefficients of an X state:
///   rho = 1/4 (I⊗I + zb I⊗σz + za σz⊗I + Σ t_i σi⊗σi)
struct BlochParams {
  double zb;  ///< local z coefficient of the measured qubit B
  double za;  ///< local z coefficient of qubit A
  double t1;
  double t2;
  double t3;
};

BlochParams bloch_params(const XState& s) noexcept;

/// Inverse of bloch_params; no validation is performed on the result.
std::array<double, 6> entries_from_bloch(const BlochParams& p) noexcept;

using DensityMatrix4 = Eigen::Matrix4cd;

DensityMatrix4 to_matrix(const XState& s);

/// Computational-basis populations of one qubit.
struct Populations {
  double p0;
  double p1;
};

/// Reduced state of qubit B (diagonal for X states): (a + c, b + d).
Populations marginal_b(const XState& s) noexcept;
/// Reduced state of qubit A: (a + b, c + d).
Populations marginal_a(const XState& s) noexcept;

/// Eigenvalues of the outer block {a, d, eps} followed by the inner block
/// {b, c, delta}, each pair ordered (+, -). Tiny negatives from rounding are
/// returned as-is.
std::array<double, 4> block_eigenvalues(const XState& s) noexcept;

}  // namespace qdiscord
