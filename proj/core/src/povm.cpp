#include "qdiscord/povm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kArccosMargin = 1e-12;

double reduce_angle(double x) {
  if (!std::isfinite(x)) throw DomainError("Euler angles must be finite");
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod of a value just below a multiple of 2pi can round up to 2pi.
  return r >= kTwoPi ? 0.0 : r;
}

double checked_arccos(double arg, const char* label) {
  if (!(arg > -1.0 + kArccosMargin && arg < 1.0 - kArccosMargin)) {
    std::ostringstream os;
    os.precision(17);
    os << "degenerate POVM weights: cos " << label << " = " << arg;
    throw DegenerateError(os.str());
  }
  return std::acos(arg);
}

struct Point2 {
  double x, y;
};

Point2 closest_on_segment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return {a.x + t * dx, a.y + t * dy};
}

}  // namespace

bool PovmWeights::admissible(double mu1, double mu2, double mu3) noexcept {
  if (!std::isfinite(mu1) || !std::isfinite(mu2) || !std::isfinite(mu3)) return false;
  // mu_j + mu_k - mu_i > margin covers both sides of |mu_j - mu_k| < mu_i < mu_j + mu_k.
  return mu2 + mu3 - mu1 >= kEdgeMargin && mu1 + mu3 - mu2 >= kEdgeMargin &&
         mu1 + mu2 - mu3 >= kEdgeMargin;
}

PovmWeights PovmWeights::make(double mu1, double mu2, double mu3) {
  if (!std::isfinite(mu1) || !std::isfinite(mu2) || !std::isfinite(mu3)) {
    throw DomainError("POVM weights must be finite");
  }
  if (std::abs(mu1 + mu2 + mu3 - 1.0) > kSumTol) {
    throw DomainError("POVM weights must sum to 1");
  }
  if (!admissible(mu1, mu2, mu3)) {
    std::ostringstream os;
    os << "POVM weights (" << mu1 << ", " << mu2 << ", " << mu3
       << ") violate the strict triangle inequalities";
    throw DegenerateError(os.str());
  }
  return PovmWeights({mu1, mu2, mu3});
}

EulerAngles EulerAngles::reduced(double psi, double theta, double phi) {
  return EulerAngles{reduce_angle(psi), reduce_angle(theta), reduce_angle(phi)};
}

TriangleAngles angles_from_weights(const PovmWeights& w) {
  const double m1 = w[0], m2 = w[1], m3 = w[2];
  TriangleAngles t{
      .theta12 = checked_arccos((m3 * m3 - m1 * m1 - m2 * m2) / (2 * m1 * m2), "theta12"),
      .theta23 = checked_arccos((m1 * m1 - m2 * m2 - m3 * m3) / (2 * m2 * m3), "theta23"),
      .theta13 = checked_arccos((m2 * m2 - m1 * m1 - m3 * m3) / (2 * m1 * m3), "theta13"),
  };
  const double sum = t.theta12 + t.theta23 + t.theta13;
  if (std::abs(sum - kTwoPi) > 1e-9) {
    throw std::logic_error("triangle angles do not close: sum = " + std::to_string(sum));
  }
  return t;
}

std::array<Vec3, 3> planar_directions(const TriangleAngles& t) {
  return {Vec3(1.0, 0.0, 0.0), Vec3(std::cos(t.theta12), std::sin(t.theta12), 0.0),
          Vec3(std::cos(t.theta13), -std::sin(t.theta13), 0.0)};
}

Mat3 rotation_matrix(const EulerAngles& e) {
  const double cp = std::cos(e.psi), sp = std::sin(e.psi);
  const double ct = std::cos(e.theta), st = std::sin(e.theta);
  const double cf = std::cos(e.phi), sf = std::sin(e.phi);
  Mat3 r_psi, r_theta, r_phi;
  r_psi << cp, 0, sp,
           0, 1, 0,
           -sp, 0, cp;
  r_theta << 1, 0, 0,
             0, ct, -st,
             0, st, ct;
  r_phi << cf, -sf, 0,
           sf, cf, 0,
           0, 0, 1;
  return r_psi * r_theta * r_phi;
}

Povm3 build_povm3(const PovmWeights& w, const EulerAngles& e) {
  const auto planar = planar_directions(angles_from_weights(w));
  const Mat3 r = rotation_matrix(e);
  Povm3 p{w, {}};
  for (std::size_t k = 0; k < 3; ++k) p.dirs[k] = r * planar[k];
  return p;
}

PovmWeights sample_weights(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    double u = unit(rng), v = unit(rng);
    if (u > v) std::swap(u, v);
    const double mu1 = u, mu2 = v - u;
    const double mu3 = 1.0 - mu1 - mu2;
    if (PovmWeights::admissible(mu1, mu2, mu3)) return PovmWeights::make(mu1, mu2, mu3);
  }
}

std::array<double, 2> project_weights(double mu1, double mu2) noexcept {
  // Shrink by twice the margin so the rounded third weight stays admissible.
  const double hi = 0.5 - PovmWeights::kEdgeMargin;
  const double lo = 1.0 - 2.0 * hi;
  if (mu1 <= hi && mu2 <= hi && mu1 + mu2 >= 1.0 - hi &&
      PovmWeights::admissible(mu1, mu2, 1.0 - mu1 - mu2)) {
    return {mu1, mu2};
  }
  const Point2 p{mu1, mu2};
  const Point2 corners[3] = {{hi, hi}, {hi, lo}, {lo, hi}};
  Point2 best{};
  double best_d2 = INFINITY;
  for (int i = 0; i < 3; ++i) {
    const Point2 q = closest_on_segment(p, corners[i], corners[(i + 1) % 3]);
    const double d2 = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = q;
    }
  }
  return {best.x, best.y};
}

EulerAngles euler_for_first_axis(const Vec3& n) {
  // With phi = pi/2 the first column of R is (sin psi sin theta, cos theta, cos psi sin theta).
  const Vec3 u = n.normalized();
  const double theta = std::acos(std::clamp(u.y(), -1.0, 1.0));
  const double psi = std::atan2(u.x(), u.z());
  return EulerAngles::reduced(psi, theta, std::numbers::pi / 2);
}

}  // namespace qdiscord
