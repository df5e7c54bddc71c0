#ifndef TODA_MEASURE_HPP
#define TODA_MEASURE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "toda/jacobi.hpp"

namespace toda {

// Finite atomic measure: strictly increasing locations, positive weights.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<double> locations, std::vector<double> weights,
                  bool normalized);

  static DiscreteMeasure from_atoms(
      std::vector<std::pair<double, double>> atoms, bool normalize = false);

  std::size_t size() const { return locations_.size(); }
  const std::vector<double>& locations() const { return locations_; }
  const std::vector<double>& weights() const { return weights_; }
  bool normalized() const { return normalized_; }

  double total_mass() const;
  DiscreteMeasure normalized_copy() const;

 private:
  std::vector<double> locations_;
  std::vector<double> weights_;
  bool normalized_;
};

// Signed k-th moment sum w_i lambda_i^k.
double measure_moment(const DiscreteMeasure& sigma, int k);

// Stieltjes transform sum w_i / (lambda_i - z); Herglotz on C+.
// Throws PoleAtZ when z is within 1e-14 of an atom.
std::complex<double> stieltjes(const DiscreteMeasure& sigma,
                               std::complex<double> z);

// Recurrence coefficients from the measure by Lanczos orthogonalization with
// full reorthogonalization. Returns a half-line window starting at 1 holding
// b_1..b_K and a_2..a_{K'} (K = min(n_max, #atoms), K' = min(n_max+1, #atoms));
// the a_1 slot is a placeholder.
JacobiCoefficients jacobi_from_measure(const DiscreteMeasure& sigma, int n_max);

// Spectral measure of a finite section: atoms at the eigenvalues, weights the
// squared first eigenvector components.
DiscreteMeasure measure_from_jacobi(const TridiagonalMatrix& T);

}  // namespace toda

#endif
