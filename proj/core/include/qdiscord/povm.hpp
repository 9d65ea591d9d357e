#pragma once

#include <array>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace qdiscord {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Seeded generator used for every random draw in the library.
using Rng = std::mt19937_64;

/// Weights of a three-element rank-one POVM, restricted to the open region
/// where the three direction vectors close a nondegenerate triangle. With the
/// weights summing to one every triangle inequality reduces to mu_i < 1/2, so
/// the region is the medial triangle of the probability simplex.
class PovmWeights {
 public:
  static constexpr double kSumTol = 1e-12;
  /// Minimum slack mu_j + mu_k - mu_i = 1 - 2 mu_i for every i.
  static constexpr double kEdgeMargin = 1e-9;

  /// Throws DomainError if the weights are non-finite or do not sum to one,
  /// DegenerateError if they violate the strict triangle inequalities.
  static PovmWeights make(double mu1, double mu2, double mu3);
  /// Third weight is 1 - mu1 - mu2.
  static PovmWeights from_pair(double mu1, double mu2) { return make(mu1, mu2, 1.0 - mu1 - mu2); }

  static bool admissible(double mu1, double mu2, double mu3) noexcept;

  double operator[](std::size_t k) const noexcept { return mu_[k]; }
  const std::array<double, 3>& values() const noexcept { return mu_; }

  friend bool operator==(const PovmWeights&, const PovmWeights&) = default;

 private:
  explicit PovmWeights(std::array<double, 3> mu) : mu_(mu) {}
  std::array<double, 3> mu_;
};

/// Pairwise angles between the planar direction vectors, each in (0, pi).
struct TriangleAngles {
  double theta12;
  double theta23;
  double theta13;
};

/// Rotation angles, each reduced to [0, 2pi).
struct EulerAngles {
  double psi = 0;
  double theta = 0;
  double phi = 0;

  static EulerAngles reduced(double psi, double theta, double phi);

  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

/// Elements mu_k (I + m_k · sigma), k = 1..3.
struct Povm3 {
  PovmWeights weights;
  std::array<Vec3, 3> dirs;
};

/// Throws DegenerateError when an arccos argument is within 1e-12 of +-1.
TriangleAngles angles_from_weights(const PovmWeights& w);

/// (1,0,0), (cos t12, sin t12, 0), (cos t13, -sin t13, 0).
std::array<Vec3, 3> planar_directions(const TriangleAngles& t);

/// R_psi R_theta R_phi with R_psi about y, R_theta about x and R_phi about z.
Mat3 rotation_matrix(const EulerAngles& e);

Povm3 build_povm3(const PovmWeights& w, const EulerAngles& e);

/// Uniform draw over the admissible region by rejection from the simplex.
PovmWeights sample_weights(Rng& rng);

/// Nearest point (in the (mu1, mu2) plane) of the admissible region shrunk
/// by kEdgeMargin. Returns the pair (mu1, mu2).
std::array<double, 2> project_weights(double mu1, double mu2) noexcept;

/// Euler angles whose rotation maps the x axis onto the unit vector n.
EulerAngles euler_for_first_axis(const Vec3& n);

}  // namespace qdiscord
