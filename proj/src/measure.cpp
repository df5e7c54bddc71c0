#include "toda/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace toda {

DiscreteMeasure::DiscreteMeasure(std::vector<double> locations,
                                 std::vector<double> weights, bool normalized)
    : locations_(std::move(locations)),
      weights_(std::move(weights)),
      normalized_(normalized) {
  if (locations_.size() != weights_.size())
    throw PreconditionViolation("measure: locations/weights length mismatch");
  if (locations_.empty())
    throw PreconditionViolation("measure: needs at least one atom");
  for (std::size_t i = 0; i < locations_.size(); ++i) {
    if (!(weights_[i] > 0.0))
      throw PreconditionViolation("measure: weights must be positive");
    if (i > 0 && !(locations_[i] > locations_[i - 1]))
      throw PreconditionViolation("measure: locations must be strictly increasing");
  }
  if (normalized_ && std::fabs(total_mass() - 1.0) > 1e-12)
    throw PreconditionViolation("measure: flagged normalized but mass != 1");
}

DiscreteMeasure DiscreteMeasure::from_atoms(
    std::vector<std::pair<double, double>> atoms, bool normalize) {
  std::sort(atoms.begin(), atoms.end());
  std::vector<double> locs, wts;
  locs.reserve(atoms.size());
  wts.reserve(atoms.size());
  for (auto& [l, w] : atoms) {
    locs.push_back(l);
    wts.push_back(w);
  }
  if (normalize) {
    double mass = std::accumulate(wts.begin(), wts.end(), 0.0);
    if (!(mass > 0.0)) throw PreconditionViolation("measure: nonpositive mass");
    for (double& w : wts) w /= mass;
  }
  return DiscreteMeasure(std::move(locs), std::move(wts), normalize);
}

double DiscreteMeasure::total_mass() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

DiscreteMeasure DiscreteMeasure::normalized_copy() const {
  std::vector<double> wts = weights_;
  const double mass = total_mass();
  for (double& w : wts) w /= mass;
  return DiscreteMeasure(locations_, std::move(wts), true);
}

double measure_moment(const DiscreteMeasure& sigma, int k) {
  if (k < 0) throw PreconditionViolation("measure_moment: k must be nonnegative");
  double acc = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    acc += sigma.weights()[i] * std::pow(sigma.locations()[i], k);
  return acc;
}

std::complex<double> stieltjes(const DiscreteMeasure& sigma,
                               std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::complex<double> den = sigma.locations()[i] - z;
    if (std::abs(den) < 1e-14)
      throw PoleAtZ("stieltjes: z coincides with an atom");
    acc += sigma.weights()[i] / den;
  }
  return acc;
}

JacobiCoefficients jacobi_from_measure(const DiscreteMeasure& sigma, int n_max) {
  const std::size_t P = sigma.size();
  if (n_max < 1) throw PreconditionViolation("jacobi_from_measure: n_max >= 1");
  if (static_cast<std::size_t>(n_max) > P)
    throw RankDeficient("jacobi_from_measure: measure has too few atoms");

  const std::size_t n_b = static_cast<std::size_t>(n_max);
  const std::size_t n_a = std::min<std::size_t>(n_b + 1, P);  // up to a_{n_a}

  const std::vector<double>& lam = sigma.locations();
  const std::vector<double>& w = sigma.weights();
  double lam_max = 0.0;
  for (double l : lam) lam_max = std::max(lam_max, std::fabs(l));

  auto dot = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < P; ++i) acc += w[i] * u[i] * v[i];
    return acc;
  };

  std::vector<std::vector<double>> basis;  // orthonormal in the sigma inner product
  std::vector<double> v(P, 1.0);
  {
    const double nrm = std::sqrt(dot(v, v));
    for (double& x : v) x /= nrm;
  }
  basis.push_back(v);

  std::vector<double> bcoef, acoef;
  std::vector<double> prev(P, 0.0);
  double a_prev = 0.0;

  for (std::size_t j = 1; j <= n_b; ++j) {
    std::vector<double> hv(P);
    for (std::size_t i = 0; i < P; ++i) hv[i] = lam[i] * v[i];
    const double bj = dot(v, hv);
    bcoef.push_back(bj);
    if (j + 1 > n_a && j == n_b) break;  // no further coupling requested

    std::vector<double> r(P);
    for (std::size_t i = 0; i < P; ++i)
      r[i] = hv[i] - bj * v[i] - a_prev * prev[i];
    // Full reorthogonalization, applied twice.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const double c = dot(q, r);
        for (std::size_t i = 0; i < P; ++i) r[i] -= c * q[i];
      }
    const double a2 = dot(r, r);
    if (j + 1 <= n_a) {
      if (a2 < 1e-13 * lam_max * lam_max)
        throw LossOfOrthogonality(
            "jacobi_from_measure: residual below working precision");
      const double aj = std::sqrt(a2);
      acoef.push_back(aj);
      prev = v;
      a_prev = aj;
      for (std::size_t i = 0; i < P; ++i) v[i] = r[i] / aj;
      basis.push_back(v);
    }
  }

  std::vector<double> a_out;
  a_out.reserve(acoef.size() + 1);
  a_out.push_back(1.0);  // a_1 placeholder: no coupling below a half-line window
  a_out.insert(a_out.end(), acoef.begin(), acoef.end());
  if (a_out.size() > bcoef.size() + 1) a_out.resize(bcoef.size() + 1);
  return JacobiCoefficients(1, std::move(a_out), std::move(bcoef), std::nullopt);
}

DiscreteMeasure measure_from_jacobi(const TridiagonalMatrix& T) {
  Eigendecomposition ed = eigendecompose(T);
  std::vector<double> locs, wts;
  locs.reserve(ed.eigenvalues.size());
  wts.reserve(ed.eigenvalues.size());
  double scale = 1e-300;
  for (double lam : ed.eigenvalues) scale = std::max(scale, std::fabs(lam));
  for (std::size_t i = 0; i < ed.eigenvalues.size(); ++i) {
    if (ed.first_row_weights[i] <= 0.0) continue;  // clamped weight: drop atom
    if (!locs.empty() && ed.eigenvalues[i] - locs.back() <= 1e-15 * scale) {
      wts.back() += ed.first_row_weights[i];  // merge numerically coincident atoms
      continue;
    }
    locs.push_back(ed.eigenvalues[i]);
    wts.push_back(ed.first_row_weights[i]);
  }
  return DiscreteMeasure(std::move(locs), std::move(wts), true);
}

}  // namespace toda
