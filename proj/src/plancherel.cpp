#include "residua/plancherel.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "residua/errors.hpp"

namespace residua {

namespace {

constexpr std::size_t kMinNodes = 64;
constexpr std::size_t kMaxNodes = 1u << 22;

// Mean of f over [0, 2pi) by the trapezoid rule with node doubling; the
// integrands here are smooth and periodic, so convergence is geometric.
double circle_mean(double tol, const std::function<double(double)>& f) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::size_t n = kMinNodes;
  double prev = 0.0;
  for (std::size_t j = 0; j < n; ++j) prev += f(two_pi * static_cast<double>(j) / n);
  prev /= static_cast<double>(n);
  while (n < kMaxNodes) {
    // Reuse: the 2n-point mean is the average of the n-point mean and the
    // mean over the odd nodes.
    double odd = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      odd += f(two_pi * (2.0 * static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(n)));
    odd /= static_cast<double>(n);
    double cur = 0.5 * (prev + odd);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
    n *= 2;
  }
  return prev;
}

}  // namespace

std::complex<double> rank1_eta(double q, std::complex<double> t) {
  if (q == 1.0) return 1.0;
  std::complex<double> num = (t - 1.0) * (t - 1.0);
  std::complex<double> den = (t - q) * (t - 1.0 / q);
  return num / den;
}

double trace_of_one(double q, double radius, double tol) {
  if (!(q > 0.0)) throw DomainError("rank-1 parameter must be positive");
  double pole = std::min({1.0, q, 1.0 / q});
  if (!(radius > 0.0) || radius >= pole)
    throw DomainError("contour radius must lie strictly between 0 and " + std::to_string(pole));
  return circle_mean(tol, [q, radius](double theta) {
    return rank1_eta(q, std::polar(radius, theta)).real();
  });
}

RankOneSpectrum decompose(const Rat& q, std::size_t samples) {
  if (rat_sgn(q) <= 0) throw DomainError("rank-1 parameter must be positive");
  RankOneSpectrum s;
  s.q = rat_double(q);
  const double tol = 1e-12;

  s.continuous_total = circle_mean(tol, [&s](double theta) {
    return rank1_eta(s.q, std::polar(1.0, theta)).real();
  });

  if (q != 1) {
    // Crossed pole c = min(q, 1/q); minus the residue of eta(t)/t there:
    //   -(c-1)^2 / (c (c - c')) with c' the outer pole, which collapses to
    //   |q-1| / (q+1), positive for every q != 1.
    Rat mass_exact = Rat(q > 1 ? Rat(q - 1) : Rat(1 - q)) / Rat(q + 1);
    double c = std::min(s.q, 1.0 / s.q);
    double outer = std::max(s.q, 1.0 / s.q);
    double eps = 0.25 * std::min({c, outer - c, 1.0 - c});
    double mass_numeric = -circle_mean(tol, [&](double theta) {
      std::complex<double> t = c + std::polar(eps, theta);
      std::complex<double> contrib =
          rank1_eta(s.q, t) / t * std::polar(eps, theta);
      return contrib.real();
    });
    double mass = rat_double(mass_exact);
    if (std::abs(mass - mass_numeric) > 1e-10)
      throw std::logic_error("residue cross-check failed: exact " + std::to_string(mass) +
                             " vs quadrature " + std::to_string(mass_numeric));
    if (!(mass > 0.0)) throw std::logic_error("point mass must be strictly positive");
    s.point_masses.push_back({"q^-1", c, mass});
  }

  s.total = s.continuous_total;
  for (const auto& pm : s.point_masses) s.total += pm.mass;
  if (std::abs(s.total - 1.0) > 1e-10)
    throw std::logic_error("spectrum total " + std::to_string(s.total) + " is not 1");

  s.density_samples.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    double value = rank1_eta(s.q, std::polar(1.0, theta)).real();
    if (value == 0.0) value = 0.0;  // clear the sign of a -0.0 at the zero t = 1
    s.density_samples.emplace_back(theta, value);
  }
  return s;
}

bool cross_check_support(const Rat& q, const OrbitTable& table) {
  if (rat_sgn(q) <= 0) return false;
  if (table.type != "A1" || table.rank != 1) return false;
  if (table.params.by_class.size() != 1) return false;
  const Rat& k = table.params.by_class[0];

  // q = exp k: the signs must agree before any support can match.
  if (rat_sgn(Rat(q - 1)) != rat_sgn(k)) return false;

  std::size_t dim1 = 0;
  std::vector<const ResidualOrbit*> dim0;
  for (const ResidualOrbit& o : table.orbits) {
    if (o.rep.dim() == 1) ++dim1;
    if (o.rep.dim() == 0) dim0.push_back(&o);
  }
  if (dim1 != 1) return false;  // the continuous support is the circle, once

  RankOneSpectrum s = decompose(q);
  if (q == 1) return dim0.empty() && s.point_masses.empty();

  if (s.point_masses.size() != 1 || dim0.size() != 1) return false;
  if (dim0[0]->orbit_size != 2) return false;  // {q, q^-1} has two members

  // The dominant residual point pairs with the root at |k|, matching the
  // +-1 exponents of the multiplicative orbit.
  RootSystem R = RootSystem::build(table.type);
  Rat pairing = dot(R.simple_roots[0], dim0[0]->rep.flat.center);
  return pairing == abs(k);
}

}  // namespace residua
