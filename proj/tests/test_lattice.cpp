#include <cmath>
#include <vector>

#include "doctest.h"
#include "toda/jacobi.hpp"
#include "toda/measure.hpp"
#include "toda/rng.hpp"

using namespace toda;

namespace {

// Dense Jacobi-rotation eigensolver, independent of the QL path. Returns
// eigenvalues (unsorted) and the full eigenvector matrix columns.
void dense_symmetric_eigen(std::vector<std::vector<double>> A,
                           std::vector<double>& eval,
                           std::vector<std::vector<double>>& evec) {
  const std::size_t n = A.size();
  evec.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) evec[i][i] = 1.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(A[p][q]) < 1e-300) continue;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = evec[k][p], vkq = evec[k][q];
          evec[k][p] = c * vkp - s * vkq;
          evec[k][q] = s * vkp + c * vkq;
        }
      }
  }
  eval.resize(n);
  for (std::size_t i = 0; i < n; ++i) eval[i] = A[i][i];
}

JacobiCoefficients random_bounded_lattice(SplitMix64& g, long lo, long hi) {
  std::vector<double> a, b;
  for (long n = lo; n <= hi; ++n) {
    a.push_back(0.5 + g.next_double());
    b.push_back(g.next_double() - 0.5);
  }
  return JacobiCoefficients(lo, a, b, FreeBackground{1.0, 0.0});
}

}  // namespace

TEST_CASE("truncate of the free lattice") {
  auto q = JacobiCoefficients::free_lattice(1.0, 0.0);
  auto T = truncate(q, 0, 2);
  CHECK(T.diag == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(T.offdiag == std::vector<double>{1.0, 1.0});
}

TEST_CASE("truncate precondition lo <= hi") {
  auto q = JacobiCoefficients::free_lattice();
  CHECK_THROWS_AS(truncate(q, 2, 1), PreconditionViolation);
}

TEST_CASE("no background forbids access outside the window") {
  JacobiCoefficients q(1, {1.0, 0.5}, {0.0, 0.0}, std::nullopt);
  CHECK_THROWS_AS(truncate(q, 0, 1), IndexOutOfBackground);
  CHECK_THROWS_AS(q.b_at(3), IndexOutOfBackground);
  CHECK(q.a_at(2) == 0.5);
}

TEST_CASE("3x3 window with eigenvalues {-1,0,1}") {
  const double a2 = std::sqrt(2.0 / 3.0), a3 = std::sqrt(1.0 / 3.0);
  JacobiCoefficients q(1, {1.0, a2, a3}, {0.0, 0.0, 0.0}, std::nullopt);
  auto T = truncate(q, 1, 3);
  auto ed = eigendecompose(T);
  REQUIRE(ed.eigenvalues.size() == 3);
  CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ed.eigenvalues[1] == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(ed.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));
  for (double w : ed.first_row_weights)
    CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("2x2 and 1x1 eigendecompositions") {
  TridiagonalMatrix T2{{0.0, 0.0}, {1.0}};
  auto ed2 = eigendecompose(T2);
  CHECK(ed2.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(ed2.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(ed2.first_row_weights[0] == doctest::Approx(0.5));
  CHECK(ed2.first_row_weights[1] == doctest::Approx(0.5));

  TridiagonalMatrix T1{{5.0}, {}};
  auto ed1 = eigendecompose(T1);
  CHECK(ed1.eigenvalues[0] == doctest::Approx(5.0));
  CHECK(ed1.first_row_weights[0] == doctest::Approx(1.0));
}

TEST_CASE("eigendecompose matches a dense Jacobi-rotation oracle") {
  SplitMix64 g(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(g.next_u64() % 9);
    TridiagonalMatrix T;
    for (std::size_t i = 0; i < n; ++i) T.diag.push_back(2.0 * g.next_double() - 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) T.offdiag.push_back(0.2 + g.next_double());

    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = T.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = T.offdiag[i];
    std::vector<double> eval;
    std::vector<std::vector<double>> evec;
    dense_symmetric_eigen(A, eval, evec);

    auto ed = eigendecompose(T);
    std::vector<std::pair<double, double>> oracle;
    for (std::size_t i = 0; i < n; ++i)
      oracle.emplace_back(eval[i], evec[0][i] * evec[0][i]);
    std::sort(oracle.begin(), oracle.end());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ed.eigenvalues[i] == doctest::Approx(oracle[i].first).epsilon(1e-10));
      CHECK(ed.first_row_weights[i] ==
            doctest::Approx(oracle[i].second).scale(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("weights sum to one and reconstruct the corner entry") {
  SplitMix64 g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(g.next_u64() % 30);
    TridiagonalMatrix T;
    for (std::size_t i = 0; i < n; ++i) T.diag.push_back(2.0 * g.next_double() - 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) T.offdiag.push_back(0.1 + g.next_double());
    auto ed = eigendecompose(T);
    double sw = 0.0, slw = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ed.first_row_weights[i] >= 0.0);
      sw += ed.first_row_weights[i];
      slw += ed.eigenvalues[i] * ed.first_row_weights[i];
    }
    CHECK(sw == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slw == doctest::Approx(T.diag[0]).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("constant-background truncations stay inside the spectral band") {
  const double ab = 0.7, bb = 0.3;
  auto q = JacobiCoefficients::free_lattice(ab, bb);
  for (long m : {3L, 10L, 31L}) {
    auto ed = eigendecompose(truncate(q, -m, m));
    CHECK(ed.eigenvalues.front() >= bb - 2 * ab - 1e-12);
    CHECK(ed.eigenvalues.back() <= bb + 2 * ab + 1e-12);
  }
}

TEST_CASE("operator_moment basics") {
  auto q = JacobiCoefficients::free_lattice(1.0, 0.0);
  CHECK(operator_moment(q, 2, 0) == doctest::Approx(2.0));
  CHECK(operator_moment(q, 0, 17) == 1.0);

  // half-line a_n = sqrt(n), site 1: (H^2 delta_1, delta_1) = a_2^2 = 2
  std::vector<double> a, b;
  for (long n = 1; n <= 8; ++n) {
    a.push_back(std::sqrt(double(n)));
    b.push_back(0.0);
  }
  JacobiCoefficients h(1, a, b, std::nullopt);
  CHECK(operator_moment(h, 2, 1) == doctest::Approx(2.0));
}

TEST_CASE("free-lattice even moments count lattice paths") {
  auto q = JacobiCoefficients::free_lattice(1.0, 0.0);
  // central binomial coefficients C(2k, k)
  CHECK(operator_moment(q, 4, 3) == doctest::Approx(6.0));
  CHECK(operator_moment(q, 6, -2) == doctest::Approx(20.0));
  CHECK(operator_moment(q, 1, 0) == doctest::Approx(0.0));
}

TEST_CASE("section moments equal operator moments up to the boundary depth") {
  SplitMix64 g(99);
  for (int trial = 0; trial < 5; ++trial) {
    auto q = random_bounded_lattice(g, -12, 12);
    const long site = 0;
    const long m = 9;  // distance from site to the truncation boundary
    auto T = truncate(q, site - m, site + m);
    const std::size_t n = T.size();
    std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) A[i][i] = T.diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = T.offdiag[i];
    std::vector<double> eval;
    std::vector<std::vector<double>> evec;
    dense_symmetric_eigen(A, eval, evec);
    const std::size_t center = static_cast<std::size_t>(site - (site - m));
    for (int k = 0; k <= static_cast<int>(m); ++k) {
      double spec = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        spec += evec[center][i] * evec[center][i] * std::pow(eval[i], k);
      CHECK(spec ==
            doctest::Approx(operator_moment(q, k, site)).scale(1.0).epsilon(1e-10));
    }
    // First-row weights from eigendecompose agree with the finite-window
    // operator moments at the corner site.
    auto ed = eigendecompose(T);
    std::vector<double> sec_a{1.0};  // inert edge slot
    sec_a.insert(sec_a.end(), T.offdiag.begin(), T.offdiag.end());
    JacobiCoefficients section(site - m, sec_a, T.diag, std::nullopt);
    for (int k = 0; k <= 6; ++k) {
      double spec = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        spec += ed.first_row_weights[i] * std::pow(ed.eigenvalues[i], k);
      CHECK(spec ==
            doctest::Approx(operator_moment(section, k, site - m)).scale(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("reflection is an involution and mirrors coefficients") {
  SplitMix64 g(3);
  auto q = random_bounded_lattice(g, -3, 4);
  auto r = q.reflected();
  CHECK(r.b_at(-2) == q.b_at(2));
  CHECK(r.a_at(0) == q.a_at(1));
  CHECK(r.a_at(1) == q.a_at(0));
  auto rr = r.reflected();
  for (long n = -3; n <= 4; ++n) {
    CHECK(rr.b_at(n) == q.b_at(n));
    CHECK(rr.a_at(n) == q.a_at(n));
  }
}
