#include "toda/weyl.hpp"

#include <cmath>

namespace toda {

namespace {

Complex phi(Complex z) { return z + 1.0 / z; }

constexpr double kRescaleThreshold = 1e150;
constexpr int kRescaleShift = 500;  // divide by 2^500 when triggered

}  // namespace

Complex FundamentalSolutions::c_at(long n) const {
  return c[static_cast<std::size_t>(n)] *
         std::exp2(log2_scale[static_cast<std::size_t>(n)]);
}

Complex FundamentalSolutions::s_at(long n) const {
  return s[static_cast<std::size_t>(n)] *
         std::exp2(log2_scale[static_cast<std::size_t>(n)]);
}

FundamentalSolutions fundamental_solutions(const JacobiCoefficients& q,
                                           Complex z, long L) {
  if (L < 0) throw PreconditionViolation("fundamental_solutions: L >= 0");
  FundamentalSolutions fs;
  fs.L = L;
  fs.c.resize(static_cast<std::size_t>(L) + 2);
  fs.s.resize(static_cast<std::size_t>(L) + 2);
  fs.log2_scale.assign(static_cast<std::size_t>(L) + 2, 0.0);
  fs.c[0] = 1.0;
  fs.c[1] = 0.0;
  fs.s[0] = 0.0;
  fs.s[1] = 1.0;

  Complex c_prev = 1.0, c_cur = 0.0, s_prev = 0.0, s_cur = 1.0;
  double offset = 0.0;
  for (long n = 1; n <= L; ++n) {
    const double an = q.a_at(n), an1 = q.a_at(n + 1), bn = q.b_at(n);
    Complex c_next = ((z - bn) * c_cur - an * c_prev) / an1;
    Complex s_next = ((z - bn) * s_cur - an * s_prev) / an1;
    if (std::abs(c_next) + std::abs(s_next) > kRescaleThreshold) {
      const double f = std::exp2(-kRescaleShift);
      c_cur *= f;
      c_next *= f;
      s_cur *= f;
      s_next *= f;
      offset += kRescaleShift;
      fs.log2_scale[static_cast<std::size_t>(n)] = offset;
      fs.c[static_cast<std::size_t>(n)] = c_cur;
      fs.s[static_cast<std::size_t>(n)] = s_cur;
    }
    fs.c[static_cast<std::size_t>(n + 1)] = c_next;
    fs.s[static_cast<std::size_t>(n + 1)] = s_next;
    fs.log2_scale[static_cast<std::size_t>(n + 1)] = offset;
    c_prev = c_cur;
    c_cur = c_next;
    s_prev = s_cur;
    s_cur = s_next;
  }
  return fs;
}

Complex wronskian(const FundamentalSolutions& fs, long n) {
  const auto i = static_cast<std::size_t>(n);
  const Complex raw = fs.c[i] * fs.s[i + 1] - fs.c[i + 1] * fs.s[i];
  const double s2 = fs.log2_scale[i] + fs.log2_scale[i + 1];
  return raw * std::exp2(s2);
}

bool WeylDisk::contains(Complex m, double tol) const {
  return std::abs(m - center) <= radius + tol;
}

WeylDisk weyl_disk(const JacobiCoefficients& q, Complex z, long L) {
  if (!(z.imag() > 0.0))
    throw PreconditionViolation("weyl_disk: Im z must be positive");
  if (L < 1) throw PreconditionViolation("weyl_disk: L >= 1");
  const auto fs = fundamental_solutions(q, z, L);
  const auto iL = static_cast<std::size_t>(L);
  const Complex sL = fs.s[iL], sL1 = fs.s[iL + 1];
  const Complex cL = fs.c[iL], cL1 = fs.c[iL + 1];
  const double S = fs.log2_scale[iL] + fs.log2_scale[iL + 1];

  const Complex A = -sL * std::conj(sL1);
  if (std::abs(A.imag()) < 1e-14 * (std::abs(sL) * std::abs(sL1) + 1e-300))
    throw DegenerateDisk("weyl_disk: Im(s_L conj s_{L+1}) vanished");
  if (!(A.imag() > 0.0))
    throw InternalError("weyl_disk: Im A must be positive for Im z > 0");

  const double a1 = q.a_at(1), aL1 = q.a_at(L + 1);
  const Complex B = sL * std::conj(cL1);
  const Complex C = cL * std::conj(sL1);
  // center = -a1 E / sqrt(Im A) with E = (C - conj B) / (2i sqrt(Im A));
  // raw scale factors cancel in the ratio.
  WeylDisk d;
  d.center = -a1 * (C - std::conj(B)) / (Complex(0.0, 2.0) * A.imag());
  d.radius = std::ldexp(a1 / (2.0 * std::sqrt(aL1) * std::abs(A.imag())),
                        static_cast<int>(-S));
  d.L = L;
  d.z = z;
  d.a1 = a1;
  return d;
}

double weyl_defining_lhs(const FundamentalSolutions& fs, double a1, Complex m) {
  double acc = 0.0;
  for (long n = 1; n <= fs.L; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Complex v = fs.c[i] - m / a1 * fs.s[i];
    const double t = std::norm(v);
    acc += std::ldexp(t, static_cast<int>(2.0 * fs.log2_scale[i]));
  }
  return acc;
}

Complex m_plus(const JacobiCoefficients& q, Complex z, long M) {
  if (M < 1) throw PreconditionViolation("m_plus: M >= 1");
  const auto sigma = measure_from_jacobi(truncate(q, 1, M));
  return stieltjes(sigma, z);
}

Complex m_plus_converged(const JacobiCoefficients& q, Complex z, double tol,
                         long M0, long M_max) {
  Complex prev = m_plus(q, z, M0);
  for (long M = 2 * M0; M <= M_max; M *= 2) {
    const Complex cur = m_plus(q, z, M);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw ConvergenceFailure("m_plus_converged: truncation did not stabilize");
}

namespace {

// Section bounds available for the two half lines: a finite window caps M.
long right_cap(const JacobiCoefficients& q, long M) {
  return q.background() ? M : std::min<long>(M, q.window_end());
}

}  // namespace

Complex m_whole(const JacobiCoefficients& q, Complex z, long M) {
  const double az = std::abs(z);
  if (std::fabs(az - 1.0) < 1e-12)
    throw PreconditionViolation("m_whole: |z| must differ from 1");
  const Complex w = phi(z);
  if (az > 1.0) {
    const long Mr = right_cap(q, M);
    const auto sigma = measure_from_jacobi(truncate(q, 1, Mr));
    for (double lam : sigma.locations())
      if (std::abs(lam - w) < 1e-12)
        throw NearSpectrum("m_whole: phi(z) within 1e-12 of section spectrum");
    const double a1 = q.a_at(1);
    return w + a1 * a1 * stieltjes(sigma, w);
  }
  const auto qr = q.reflected();
  const long Ml = right_cap(qr, M);
  const auto sigma = measure_from_jacobi(truncate(qr, 1, Ml));
  for (double lam : sigma.locations())
    if (std::abs(lam - w) < 1e-12)
      throw NearSpectrum("m_whole: phi(z) within 1e-12 of section spectrum");
  const double a0 = q.a_at(0);
  return -a0 * a0 * stieltjes(sigma, w) + q.b_at(0);
}

Complex resolvent_diag0(const JacobiCoefficients& q, Complex w, long M) {
  const double a1 = q.a_at(1), a0 = q.a_at(0), b0 = q.b_at(0);
  const Complex mp = m_plus(q, w, right_cap(q, M));
  const auto qr = q.reflected();
  const Complex mm = m_plus(qr, w, right_cap(qr, M));
  const Complex den = a1 * a1 * mp + a0 * a0 * mm + w - b0;
  if (std::abs(den) < 1e-12)
    throw NearSpectrum("resolvent_diag0: denominator below 1e-12");
  return -1.0 / den;
}

}  // namespace toda
