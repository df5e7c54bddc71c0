#ifndef TODA_JACOBI_HPP
#define TODA_JACOBI_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "toda/errors.hpp"

namespace toda {

// Constant extension a_n = a0, b_n = b0 outside the stored window.
struct FreeBackground {
  double a0 = 1.0;
  double b0 = 0.0;
};

// Jacobi coefficients q = {a_n, b_n} over an index window.
//
// b[k] holds b_{window_start+k}. a[k] holds a_{window_start+k}; the a array
// may carry one extra entry (the coupling just past the right end of the b
// window). With no background the window is a self-contained operator on
// l^2(window): couplings a_{lo+1}..a_{hi} act, the edge entries a_lo and
// a_{hi+1} are inert. Half-line data is a window starting at 1 with no
// background; its a_1 slot is a placeholder (no site 0 to couple to).
class JacobiCoefficients {
 public:
  JacobiCoefficients(long window_start, std::vector<double> a,
                     std::vector<double> b,
                     std::optional<FreeBackground> background);

  // Whole-line constant lattice with an empty window.
  static JacobiCoefficients free_lattice(double a0 = 1.0, double b0 = 0.0);

  long window_start() const { return window_start_; }
  // Last site carrying a stored b value, window_start-1 when the window is empty.
  long window_end() const {
    return window_start_ + static_cast<long>(b_.size()) - 1;
  }
  std::size_t window_size() const { return b_.size(); }
  const std::vector<double>& a_data() const { return a_; }
  const std::vector<double>& b_data() const { return b_; }
  const std::optional<FreeBackground>& background() const { return background_; }

  bool covers_a(long n) const;
  bool covers_b(long n) const;

  // Coefficient access; throws IndexOutOfBackground outside the window when
  // there is no background.
  double a_at(long n) const;
  double b_at(long n) const;

  // Reflection n -> -n: b'_n = b_{-n}, a'_n = a_{1-n} (couplings mirrored).
  JacobiCoefficients reflected() const;

 private:
  long window_start_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::optional<FreeBackground> background_;
};

// Symmetric tridiagonal section: diag = b entries, offdiag = a entries.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

// Finite section with diag b_lo..b_hi and offdiag a_{lo+1}..a_hi.
TridiagonalMatrix truncate(const JacobiCoefficients& q, long lo, long hi);

// The tridiagonal section as a finite window (no background); the leading a
// slot is inert and set to 1.
JacobiCoefficients window_from_tridiagonal(const TridiagonalMatrix& T,
                                           long window_start);

struct Eigendecomposition {
  std::vector<double> eigenvalues;        // ascending
  std::vector<double> first_row_weights;  // squared first components, sum 1
  bool weights_clamped = false;           // some weight fell below 1e-300
};

// Implicit-shift QL on the symmetric tridiagonal form, accumulating only the
// first eigenvector component.
Eigendecomposition eigendecompose(const TridiagonalMatrix& T);

// (H_q^k delta_site, delta_site) by k banded applications. With a free
// background the operator lives on the whole line; without one it is the
// finite window operator.
double operator_moment(const JacobiCoefficients& q, int k, long site);

}  // namespace toda

#endif
