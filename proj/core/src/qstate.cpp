#include "qdiscord/qstate.hpp"

#include <cmath>
#include <sstream>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

double clamp_population(double p, const char* label) {
  if (p < -XState::kPositivityTol) {
    std::ostringstream os;
    os << "population " << label << " = " << p << " is negative";
    throw PositivityError(os.str());
  }
  return p < 0 ? 0.0 : p;
}

}  // namespace

XState XState::from_entries(double a, double b, double c, double d, double eps,
                            double delta) {
  for (double v : {a, b, c, d, eps, delta}) {
    if (!std::isfinite(v)) throw DomainError("X state entries must be finite");
  }
  const double trace = a + b + c + d;
  if (std::abs(trace - 1.0) > kInputTraceTol) {
    std::ostringstream os;
    os.precision(12);
    os << "populations sum to " << trace << ", expected 1";
    throw TraceError(os.str());
  }
  a = clamp_population(a / trace, "a");
  b = clamp_population(b / trace, "b");
  c = clamp_population(c / trace, "c");
  d = clamp_population(d / trace, "d");
  eps /= trace;
  delta /= trace;

  if (a * d - eps * eps < -kPositivityTol) {
    std::ostringstream os;
    os << "outer block not positive: a*d = " << a * d << " < eps^2 = " << eps * eps;
    throw PositivityError(os.str());
  }
  if (b * c - delta * delta < -kPositivityTol) {
    std::ostringstream os;
    os << "inner block not positive: b*c = " << b * c << " < delta^2 = " << delta * delta;
    throw PositivityError(os.str());
  }
  return XState(a, b, c, d, eps, delta);
}

BlochParams bloch_params(const XState& s) noexcept {
  const double a = s.a(), b = s.b(), c = s.c(), d = s.d();
  return BlochParams{
      .zb = a - b + c - d,
      .za = a + b - c - d,
      .t1 = 2.0 * (s.delta() + s.eps()),
      .t2 = 2.0 * (s.delta() - s.eps()),
      .t3 = a - b - c + d,
  };
}

std::array<double, 6> entries_from_bloch(const BlochParams& p) noexcept {
  // Diagonal: a = (1 + zb + za + t3)/4, b = (1 - zb + za - t3)/4, ...
  const double a = (1.0 + p.zb + p.za + p.t3) / 4.0;
  const double b = (1.0 - p.zb + p.za - p.t3) / 4.0;
  const double c = (1.0 + p.zb - p.za - p.t3) / 4.0;
  const double d = (1.0 - p.zb - p.za + p.t3) / 4.0;
  const double eps = (p.t1 - p.t2) / 4.0;
  const double delta = (p.t1 + p.t2) / 4.0;
  return {a, b, c, d, eps, delta};
}

DensityMatrix4 to_matrix(const XState& s) {
  DensityMatrix4 m = DensityMatrix4::Zero();
  m(0, 0) = s.a();
  m(1, 1) = s.b();
  m(2, 2) = s.c();
  m(3, 3) = s.d();
  m(0, 3) = m(3, 0) = s.eps();
  m(1, 2) = m(2, 1) = s.delta();
  return m;
}

Populations marginal_b(const XState& s) noexcept { return {s.a() + s.c(), s.b() + s.d()}; }

Populations marginal_a(const XState& s) noexcept { return {s.a() + s.b(), s.c() + s.d()}; }

std::array<double, 4> block_eigenvalues(const XState& s) noexcept {
  const double outer_mean = 0.5 * (s.a() + s.d());
  const double outer_rad = std::hypot(0.5 * (s.a() - s.d()), s.eps());
  const double inner_mean = 0.5 * (s.b() + s.c());
  const double inner_rad = std::hypot(0.5 * (s.b() - s.c()), s.delta());
  return {outer_mean + outer_rad, outer_mean - outer_rad, inner_mean + inner_rad,
          inner_mean - inner_rad};
}

}  // namespace qdiscord
