#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "residua/residual.hpp"

namespace residua {

// Rank-1 spectral density. With poles cleared,
//   eta(t) = (t - 1)^2 / ((t - q)(t - 1/q)),
// which is 1 at q = 1, satisfies eta(t) = eta(1/t) and eta(0) = 1, and is
// nonnegative on the unit circle, vanishing only at t = 1.
std::complex<double> rank1_eta(double q, std::complex<double> t);

// Mean of eta over the circle of the given radius, which must lie strictly
// between 0 and every pole radius (q and 1/q). The value is the residue of
// eta(t)/t at t = 0, identically 1; deviations expose quadrature or pole
// bookkeeping bugs. Throws DomainError for an invalid radius or q <= 0.
double trace_of_one(double q, double radius, double tol = 1e-12);

struct RankOneSpectrum {
  double q = 1.0;
  struct PointMass {
    std::string location;  // names the orbit {q, q^-1}
    double t = 0.0;        // the pole crossed by the contour shift
    double mass = 0.0;
  };
  std::vector<PointMass> point_masses;
  double continuous_total = 0.0;
  std::vector<std::pair<double, double>> density_samples;  // (angle, value)
  double total = 0.0;
};

// Shifts the contour from a small circle to the unit circle. The crossed
// pole at min(q, 1/q) contributes minus its residue as a discrete mass,
// computed exactly from the rational closed form and cross-checked against
// a small-circle quadrature; the unit-circle integral is the continuous
// part. Asserts total = 1 and mass > 0 internally. q = 1 is the valid
// degenerate case with no point mass. Throws DomainError for q <= 0.
RankOneSpectrum decompose(const Rat& q, std::size_t samples = 1024);

// Structural match between the spectrum of q and an A1 table computed at
// the exponent parameter k (q = exp k): the point-mass orbit pairs with
// the dim-0 orbit (present iff k != 0, of size 2, at pairing |k|), the
// continuous support with the single dim-1 orbit, and the signs of q - 1
// and k agree.
bool cross_check_support(const Rat& q, const OrbitTable& table);

}  // namespace residua
