#include "toda/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace toda {

JacobiCoefficients::JacobiCoefficients(long window_start, std::vector<double> a,
                                       std::vector<double> b,
                                       std::optional<FreeBackground> background)
    : window_start_(window_start),
      a_(std::move(a)),
      b_(std::move(b)),
      background_(background) {
  if (a_.size() != b_.size() && a_.size() != b_.size() + 1)
    throw PreconditionViolation("a length must equal b length or exceed it by one");
  for (double an : a_)
    if (!(an > 0.0)) throw PreconditionViolation("all a_n must be positive");
  if (background_ && !(background_->a0 > 0.0))
    throw PreconditionViolation("background a0 must be positive");
}

JacobiCoefficients JacobiCoefficients::free_lattice(double a0, double b0) {
  return JacobiCoefficients(0, {}, {}, FreeBackground{a0, b0});
}

bool JacobiCoefficients::covers_a(long n) const {
  return n >= window_start_ &&
         n < window_start_ + static_cast<long>(a_.size());
}

bool JacobiCoefficients::covers_b(long n) const {
  return n >= window_start_ &&
         n < window_start_ + static_cast<long>(b_.size());
}

double JacobiCoefficients::a_at(long n) const {
  if (covers_a(n)) return a_[static_cast<std::size_t>(n - window_start_)];
  if (background_) return background_->a0;
  throw IndexOutOfBackground("a_" + std::to_string(n) + " outside window");
}

double JacobiCoefficients::b_at(long n) const {
  if (covers_b(n)) return b_[static_cast<std::size_t>(n - window_start_)];
  if (background_) return background_->b0;
  throw IndexOutOfBackground("b_" + std::to_string(n) + " outside window");
}

JacobiCoefficients JacobiCoefficients::reflected() const {
  if (b_.empty())
    return JacobiCoefficients(-window_start_, {}, {}, background_);
  const long new_ws = -window_end();
  const long new_we = -window_start_;
  std::vector<double> b(b_.rbegin(), b_.rend());
  std::vector<double> a;
  a.reserve(a_.size());
  if (background_) {
    for (long m = new_ws; m < new_ws + static_cast<long>(a_.size()); ++m)
      a.push_back(a_at(1 - m));
  } else {
    // a'_{new_ws} is a_{window_end+1}; when the finite window does not store
    // that slot it is inert, so reuse the original edge slot instead.
    a.push_back(a_.size() == b_.size() + 1 ? a_.back() : a_[0]);
    for (long m = new_ws + 1; m <= new_we; ++m) a.push_back(a_at(1 - m));
  }
  return JacobiCoefficients(new_ws, std::move(a), std::move(b), background_);
}

TridiagonalMatrix truncate(const JacobiCoefficients& q, long lo, long hi) {
  if (lo > hi) throw PreconditionViolation("truncate: lo > hi");
  TridiagonalMatrix T;
  T.diag.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) T.diag.push_back(q.b_at(n));
  T.offdiag.reserve(static_cast<std::size_t>(hi - lo));
  for (long n = lo + 1; n <= hi; ++n) T.offdiag.push_back(q.a_at(n));
  return T;
}

JacobiCoefficients window_from_tridiagonal(const TridiagonalMatrix& T,
                                           long window_start) {
  std::vector<double> a{1.0};
  a.insert(a.end(), T.offdiag.begin(), T.offdiag.end());
  return JacobiCoefficients(window_start, std::move(a), T.diag, std::nullopt);
}

Eigendecomposition eigendecompose(const TridiagonalMatrix& T) {
  const std::size_t n = T.size();
  if (n == 0) throw PreconditionViolation("eigendecompose: empty matrix");
  if (T.offdiag.size() + 1 != n)
    throw PreconditionViolation("eigendecompose: offdiag length mismatch");

  std::vector<double> d = T.diag;
  std::vector<double> e(n, 0.0);
  std::copy(T.offdiag.begin(), T.offdiag.end(), e.begin());
  // z accumulates the first row of the rotation product.
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 60)
          throw ConvergenceFailure("eigendecompose: QL iteration budget exceeded");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;
        while (i-- > l) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i + 1 > l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  Eigendecomposition out;
  out.eigenvalues.reserve(n);
  out.first_row_weights.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(d[idx]);
    double w = z[idx] * z[idx];
    if (w < 1e-300) {
      if (w != 0.0) out.weights_clamped = true;
      w = 0.0;
    }
    out.first_row_weights.push_back(w);
  }
  return out;
}

double operator_moment(const JacobiCoefficients& q, int k, long site) {
  if (k < 0) throw PreconditionViolation("operator_moment: k must be nonnegative");
  if (k == 0) return 1.0;

  long lo = site - k;
  long hi = site + k;
  if (!q.background()) {
    // Finite window operator: the support never leaves the window.
    if (!q.covers_b(site))
      throw IndexOutOfBackground("operator_moment: site outside window");
    lo = std::max(lo, q.window_start());
    hi = std::min(hi, q.window_end());
  }

  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<double> u(len, 0.0), v(len, 0.0);
  u[static_cast<std::size_t>(site - lo)] = 1.0;

  for (int step = 0; step < k; ++step) {
    for (std::size_t i = 0; i < len; ++i) {
      const long n = lo + static_cast<long>(i);
      double acc = q.b_at(n) * u[i];
      if (i + 1 < len) acc += q.a_at(n + 1) * u[i + 1];
      if (i > 0) acc += q.a_at(n) * u[i - 1];
      v[i] = acc;
    }
    std::swap(u, v);
  }
  return u[static_cast<std::size_t>(site - lo)];
}

}  // namespace toda
