#ifndef TODA_WEYL_HPP
#define TODA_WEYL_HPP

#include <complex>
#include <vector>

#include "toda/jacobi.hpp"
#include "toda/measure.hpp"

namespace toda {

using Complex = std::complex<double>;

// Solutions c, s of a_{n+1} f_{n+1} + a_n f_{n-1} + b_n f_n = z f_n for
// 1 <= n <= L with c_0 = s_1 = 1, c_1 = s_0 = 0, stored for n = 0..L+1.
// True values are c[n] * 2^log2_scale[n]; the recurrence rescales both
// sequences together once |c_n| + |s_n| exceeds 1e150.
struct FundamentalSolutions {
  long L = 0;
  std::vector<Complex> c, s;
  std::vector<double> log2_scale;

  Complex c_at(long n) const;  // scaled value (may overflow for huge scales)
  Complex s_at(long n) const;
};

FundamentalSolutions fundamental_solutions(const JacobiCoefficients& q,
                                           Complex z, long L);

// Wronskian c_n s_{n+1} - c_{n+1} s_n of the true values; equals a_1/a_{n+1}.
Complex wronskian(const FundamentalSolutions& fs, long n);

// Nested disk D_L(z) in C+ of candidate m-values at truncation level L.
// The m coordinate is the one of the defining inequality
//   sum_{1<=n<=L} |c_n - a1^{-1} m s_n|^2 <= Im m / Im z,
// i.e. a1^2 m_plus for the half-line Weyl function m_plus.
struct WeylDisk {
  Complex center;
  double radius = 0.0;
  long L = 0;
  Complex z;
  double a1 = 1.0;

  bool contains(Complex m, double tol = 0.0) const;
};

WeylDisk weyl_disk(const JacobiCoefficients& q, Complex z, long L);

// Left side of the disk-defining inequality for a candidate m.
double weyl_defining_lhs(const FundamentalSolutions& fs, double a1, Complex m);

// Truncated half-line Weyl function: Stieltjes transform of the spectral
// measure of the size-M section over sites 1..M.
Complex m_plus(const JacobiCoefficients& q, Complex z, long M);

// Doubles M until two successive values differ by less than tol.
Complex m_plus_converged(const JacobiCoefficients& q, Complex z, double tol,
                         long M0 = 16, long M_max = 4096);

// Whole-line m-function: z + 1/z + a1^2 m_plus(z + 1/z) outside the unit
// circle, -a0^2 m_minus(z + 1/z) + b0 inside, with m_minus the Weyl function
// of the reflected lattice. M is the truncation size for both half lines.
Complex m_whole(const JacobiCoefficients& q, Complex z, long M);

// Resolvent diagonal (H_q - w)^{-1}(0, 0) assembled from the two truncated
// Weyl functions.
Complex resolvent_diag0(const JacobiCoefficients& q, Complex w, long M);

}  // namespace toda

#endif
