#include <cmath>
#include <random>

#include <doctest.h>

#include "w4/decomp.hpp"
#include "w4/mat2.hpp"

using namespace w4;

namespace {

Mat2 random_mat(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

Mat2 random_rank1(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (;;) {
    Vec2 u{dist(rng), dist(rng)};
    Vec2 v{dist(rng), dist(rng)};
    if (u.norm() > 0.1 && v.norm() > 0.1) return Mat2::outer(u, v);
  }
}

Mat2 reconstruct(const SvdResult& s) {
  return matmul2(s.U, matmul2(Mat2::diagonal(s.sigma_plus, s.sigma_minus), transpose2(s.V)));
}

double orthogonality_defect(const Mat2& q) {
  return (matmul2(transpose2(q), q) - Mat2::identity()).frobenius_norm();
}

}  // namespace

TEST_CASE("mat_ops basics") {
  const Mat2 a{1.0, 2.0, 3.0, 4.0};
  CHECK(det2(a) == -2.0);
  CHECK(trace2(a) == 5.0);
  const Mat2 ia = matmul2(Mat2::identity(), a);
  CHECK(ia.a00 == a.a00);
  CHECK(ia.a11 == a.a11);
  const Mat2 att = transpose2(transpose2(a));
  CHECK(att.a01 == a.a01);
  CHECK(att.a10 == a.a10);
  const Vec2 av = matvec2(a, {1.0, 1.0});
  CHECK(av.e0 == 3.0);
  CHECK(av.e1 == 7.0);
}

TEST_CASE("eig2 diagonal and rotation") {
  const EigPair2 d = eig2(Mat2::diagonal(2.0, 1.0));
  CHECK(d.lambda_plus.real() == doctest::Approx(2.0));
  CHECK(d.lambda_minus.real() == doctest::Approx(1.0));

  // [[0,1],[-1,0]]: characteristic polynomial d^2 + 1 = 0.
  const EigPair2 rot = eig2({0.0, 1.0, -1.0, 0.0});
  CHECK(rot.lambda_plus.real() == doctest::Approx(0.0));
  CHECK(std::abs(rot.lambda_plus.imag()) == doctest::Approx(1.0));
  CHECK(rot.lambda_plus.imag() == -rot.lambda_minus.imag());
}

TEST_CASE("eig2 singular matrices: lambda_plus = trace, lambda_minus = 0") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 j = random_rank1(rng);
    const EigPair2 e = eig2(j);
    CHECK(std::abs(e.lambda_minus) <= 1e-12 * std::max(1.0, std::abs(e.alpha)));
    CHECK(std::abs(e.lambda_plus.real() - e.alpha) <= 1e-12 * std::max(1.0, std::abs(e.alpha)));
  }
}

TEST_CASE("eig2 trace/determinant identities") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 a = random_mat(rng);
    const EigPair2 e = eig2(a);
    const auto sum = e.lambda_plus + e.lambda_minus;
    const auto prod = e.lambda_plus * e.lambda_minus;
    CHECK(std::abs(sum - std::complex<double>(e.alpha)) <= 1e-12 * std::max(1.0, std::abs(e.alpha)));
    CHECK(std::abs(prod - std::complex<double>(e.beta)) <= 1e-12 * std::max(1.0, std::abs(e.beta)));
  }
}

TEST_CASE("svd2 identity and singular diagonal") {
  const SvdResult id = svd2(Mat2::identity());
  CHECK(id.sigma_plus == doctest::Approx(1.0));
  CHECK(id.sigma_minus == doctest::Approx(1.0));
  CHECK((id.U - Mat2::identity()).frobenius_norm() <= 1e-14);
  CHECK((id.V - Mat2::identity()).frobenius_norm() <= 1e-14);

  const SvdResult d = svd2(Mat2::diagonal(3.0, 0.0));
  CHECK(d.sigma_plus == doctest::Approx(3.0));
  CHECK(d.sigma_minus <= 1e-12);

  const SvdResult z = svd2({0.0, 0.0, 0.0, 0.0});
  CHECK(z.sigma_plus == 0.0);
  CHECK(z.sigma_minus == 0.0);
  CHECK((z.U - Mat2::identity()).frobenius_norm() == 0.0);
  CHECK((z.V - Mat2::identity()).frobenius_norm() == 0.0);
}

TEST_CASE("svd2 Powell Jacobian at the singular start") {
  const double em1 = std::exp(-1.0);
  const Mat2 j{1e4, 1e4, -em1, -em1};
  const SvdResult s = svd2(j);
  CHECK(s.sigma_minus <= 1e-10);
  // det J^T J = 0, so sigma_plus^2 = tr(J^T J) = 2 (1e8 + e^-2).
  const double expected = std::sqrt(2.0 * (1e8 + em1 * em1));
  CHECK(s.sigma_plus == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("svd2 random-matrix invariants") {
  std::mt19937_64 rng(42);
  double worst_recon = 0.0, worst_orth = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const Mat2 j = random_mat(rng);
    const SvdResult s = svd2(j);
    REQUIRE(s.sigma_plus >= s.sigma_minus);
    REQUIRE(s.sigma_minus >= 0.0);
    const double recon = (reconstruct(s) - j).frobenius_norm() / (1.0 + s.sigma_plus);
    const double orth = std::max(orthogonality_defect(s.U), orthogonality_defect(s.V));
    worst_recon = std::max(worst_recon, recon);
    worst_orth = std::max(worst_orth, orth);
  }
  CHECK(worst_recon <= 1e-12);
  CHECK(worst_orth <= 1e-12);
}

TEST_CASE("svd2 sign convention: V leading components non-negative") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    const SvdResult s = svd2(random_mat(rng));
    for (const Vec2 v : {s.v_plus(), s.v_minus()}) {
      const double lead = std::abs(v.e0) >= std::abs(v.e1) ? v.e0 : v.e1;
      CHECK(lead >= 0.0);
    }
  }
}

TEST_CASE("svd2 rank-1 matrices: sigma_minus vanishes, rank-1 identity") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 j = random_rank1(rng);
    const SvdResult s = svd2(j);
    CHECK(s.sigma_minus <= 1e-10 * std::max(1.0, s.sigma_plus));
    const Mat2 r1 = Mat2::outer(s.u_plus(), s.v_plus()) * s.sigma_plus;
    CHECK((j - r1).frobenius_norm() <= 1e-10 * s.sigma_plus);
  }
}

TEST_CASE("reg_inv_sigma") {
  const Mat2 both = reg_inv_sigma(2.0, 0.5);
  CHECK(both.a00 == 0.5);
  CHECK(both.a11 == 2.0);

  const Mat2 one = reg_inv_sigma(2.0, 0.0);
  CHECK(one.a00 == 0.5);
  CHECK(one.a11 == 1.0);

  const Mat2 none = reg_inv_sigma(0.0, 0.0);
  CHECK(none.a00 == 1.0);
  CHECK(none.a11 == 1.0);

  // Relative mode scales the floor with sigma_plus (1e-15 * 1e10 = 1e-5 here);
  // absolute mode keeps the paper's fixed cutoff.
  const Mat2 rel = reg_inv_sigma(1e10, 1e-7, 1e-15, ThresholdMode::Relative);
  CHECK(rel.a11 == 1.0);
  const Mat2 rel2 = reg_inv_sigma(1e10, 1e-4, 1e-15, ThresholdMode::Relative);
  CHECK(rel2.a11 == doctest::Approx(1e4));
  const Mat2 abs1 = reg_inv_sigma(1e10, 1e-7, 1e-15, ThresholdMode::Absolute);
  CHECK(abs1.a11 == doctest::Approx(1e7));
  const Mat2 abs2 = reg_inv_sigma(1e10, 1e-16, 1e-15, ThresholdMode::Absolute);
  CHECK(abs2.a11 == 1.0);
}

TEST_CASE("solve2") {
  const Vec2 r = solve2(Mat2::identity(), {3.0, 4.0});
  CHECK(r.e0 == 3.0);
  CHECK(r.e1 == 4.0);

  const Vec2 d = solve2(Mat2::diagonal(2.0, 4.0), {2.0, 4.0});
  CHECK(d.e0 == doctest::Approx(1.0));
  CHECK(d.e1 == doctest::Approx(1.0));

  const double em1 = std::exp(-1.0);
  CHECK_THROWS_AS(solve2({1e4, 1e4, -em1, -em1}, {1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("solve2/matvec2 round trip") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 10000; ++i) {
    const Mat2 a = random_mat(rng);
    const double na = a.frobenius_norm();
    if (std::abs(det2(a)) <= 1e-6 * na * na) continue;
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const Vec2 b{dist(rng), dist(rng)};
    const Vec2 back = matvec2(a, solve2(a, b));
    CHECK((back - b).norm() <= 1e-10 * std::max(b.norm(), 1.0));
  }
}
