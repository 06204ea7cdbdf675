#include <doctest.h>

#include <cmath>

#include "qsup/fisher.hpp"
#include "qsup/qubit.hpp"

using namespace qsup;

namespace {

const double kGridT[] = {0.1, 0.3, 0.5, 0.7, 0.9};
const double kGridN[] = {0.5, 1.0, 2.0, 5.0, 100.0};
const double kGridPhi[] = {0.0, 0.7, 2.1};

Matrix2 pauli_z() {
  Matrix2 z;
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

// Test-side oracle: the Bloch-formula Fisher matrix with central-difference
// Bloch-vector derivatives.
RealMatrix2 qfi_finite_difference(const SampleParams& p, double h) {
  auto r_of = [&p](double t, double phi) {
    return bloch_vector(signal_state({t, phi, p.n}));
  };
  Vector3 r = r_of(p.t, p.phi);
  Vector3 dr_t = (r_of(p.t + h, p.phi) - r_of(p.t - h, p.phi)) / (2.0 * h);
  Vector3 dr_p = (r_of(p.t, p.phi + h) - r_of(p.t, p.phi - h)) / (2.0 * h);
  double denom = 1.0 - r.squaredNorm();
  auto entry = [&](const Vector3& a, const Vector3& b) {
    return a.dot(b) + r.dot(a) * r.dot(b) / denom;
  };
  RealMatrix2 f;
  f << entry(dr_t, dr_t), entry(dr_t, dr_p), entry(dr_p, dr_t),
      entry(dr_p, dr_p);
  return f;
}

}  // namespace

TEST_SUITE("fisher") {

TEST_CASE("quantum Fisher matrix closed form") {
  FisherMatrix f = qfi_matrix({0.5, 1.3, 1.0});
  CHECK(f(0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(f(1, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(f(0, 1) == 0.0);
  CHECK(f(1, 0) == 0.0);

  FisherMatrix g = qfi_matrix({0.99, 0.0, 100.0});
  CHECK(g(0, 0) == doctest::Approx(1578.4849499251359).epsilon(1e-12));
  CHECK(g(1, 1) == doctest::Approx(1339.7967485796173).epsilon(1e-12));

  // t -> 0 limit at n = 1: diag(1, 0).
  FisherMatrix lim = qfi_matrix({1e-6, 0.0, 1.0});
  CHECK(lim(0, 0) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(lim(1, 1) == doctest::Approx(1e-12).epsilon(1e-11));
}

TEST_CASE("quantum Fisher matrix domain guard") {
  CHECK_THROWS_AS(qfi_matrix({1e-12, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(qfi_matrix({1.0 - 1e-12, 0.0, 1.0}), DomainError);
  CHECK_NOTHROW(qfi_matrix({1e-9, 0.0, 1.0}));
}

TEST_CASE("quantum Fisher matrix vs finite-difference Bloch oracle") {
  for (double t : kGridT)
    for (double n : {0.5, 1.0, 2.0, 5.0}) {
      SampleParams p(t, 0.7, n);
      FisherMatrix f = qfi_matrix(p);
      RealMatrix2 fd = qfi_finite_difference(p, 1e-6);
      double scale = std::max(f(0, 0), f(1, 1));
      CHECK((f - fd).cwiseAbs().maxCoeff() < 1e-6 * scale);
    }
}

TEST_CASE("state derivatives vs finite differences") {
  SampleParams p(0.7, 0.4, 3.0);
  const double h = 1e-6;
  Matrix2 num_t = (signal_state({p.t + h, p.phi, p.n}).matrix() -
                   signal_state({p.t - h, p.phi, p.n}).matrix()) /
                  (2.0 * h);
  Matrix2 num_p = (signal_state({p.t, p.phi + h, p.n}).matrix() -
                   signal_state({p.t, p.phi - h, p.n}).matrix()) /
                  (2.0 * h);
  CHECK((signal_state_derivative(p, Which::transmission) - num_t)
            .cwiseAbs()
            .maxCoeff() < 1e-9);
  CHECK((signal_state_derivative(p, Which::phase) - num_p)
            .cwiseAbs()
            .maxCoeff() < 1e-9);
}

TEST_CASE("SLD closed forms at the reference point") {
  Matrix2 lt = sld({0.5, 0.0, 1.0}, Which::transmission).matrix();
  CHECK(lt(0, 0).real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(lt(1, 1).real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(lt(0, 1).real() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(lt(0, 1).imag()) < 1e-15);

  // L_phi = 0.5 sigma_y at phi = 0.
  Matrix2 lp = sld({0.5, 0.0, 1.0}, Which::phase).matrix();
  CHECK(std::abs(lp(0, 0)) < 1e-15);
  CHECK(lp(0, 1).imag() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(lp(1, 0).imag() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("SLD defining equation and zero mean") {
  for (double t : kGridT)
    for (double phi : kGridPhi)
      for (double n : kGridN) {
        SampleParams p(t, phi, n);
        Matrix2 rho = signal_state(p).matrix();
        for (Which w : {Which::transmission, Which::phase}) {
          Matrix2 l = sld(p, w).matrix();
          Matrix2 lhs = 0.5 * (l * rho + rho * l);
          Matrix2 drho = signal_state_derivative(p, w);
          double scale = 1.0 + l.cwiseAbs().maxCoeff();
          CHECK((lhs - drho).cwiseAbs().maxCoeff() < 1e-10 * scale);
          CHECK(std::abs((rho * l).trace()) < 1e-12 * scale);
        }
      }
}

TEST_CASE("SLD quadratic mean reproduces the Fisher information") {
  for (double t : kGridT)
    for (double n : {0.5, 1.0, 2.0, 5.0}) {
      SampleParams p(t, 1.1, n);
      Matrix2 rho = signal_state(p).matrix();
      FisherMatrix f = qfi_matrix(p);
      Matrix2 lt = sld(p, Which::transmission).matrix();
      Matrix2 lp = sld(p, Which::phase).matrix();
      CHECK((rho * lt * lt).trace().real() ==
            doctest::Approx(f(0, 0)).epsilon(1e-12));
      CHECK((rho * lp * lp).trace().real() ==
            doctest::Approx(f(1, 1)).epsilon(1e-12));
      // Symmetrised cross term vanishes (diagonal model).
      CHECK(std::abs(0.5 * ((rho * (lt * lp + lp * lt)).trace().real())) <
            1e-10 * std::max(f(0, 0), f(1, 1)));
    }
}

TEST_CASE("SLD commutator closed form") {
  for (double t : {0.3, 0.5, 0.9})
    for (double n : {1.0, 2.0}) {
      SampleParams p(t, 0.3, n);
      Matrix2 lt = sld(p, Which::transmission).matrix();
      Matrix2 lp = sld(p, Which::phase).matrix();
      Matrix2 comm = lt * lp - lp * lt;
      double coeff = 2.0 * n * n * std::pow(t, 2.0 * n - 1.0) /
                     p.one_minus_t2n();
      CHECK((comm - kI * coeff * pauli_z()).cwiseAbs().maxCoeff() <
            1e-8 * coeff);
    }
}

TEST_CASE("numeric SLD agrees with the closed form") {
  for (Which w : {Which::transmission, Which::phase}) {
    SampleParams p(0.5, 0.3, 2.0);
    Matrix2 expected = sld(p, w).matrix();
    Matrix2 got = sld_numeric(p, w).matrix();
    CHECK((got - expected).cwiseAbs().maxCoeff() < 1e-6);
  }
  // (t=0.9, phi=0, n=1, phase): L_phi = 0.9 sigma_y.
  Matrix2 lp = sld_numeric({0.9, 0.0, 1.0}, Which::phase).matrix();
  CHECK(lp(1, 0).imag() == doctest::Approx(0.9).epsilon(1e-6));
}

TEST_CASE("numeric SLD guards") {
  CHECK_THROWS_AS(sld_numeric({0.5, 0.0, 1.0}, Which::phase, 1e-8),
                  DomainError);
  CHECK_THROWS_AS(sld_numeric({0.5, 0.0, 1.0}, Which::phase, 1e-3),
                  DomainError);
  // A vanishing pass count drives the state pure; the Lyapunov system
  // degenerates before the domain clamp trips.
  CHECK_THROWS_AS(sld_numeric({0.5, 0.0, 1e-14}, Which::transmission),
                  SingularSystemError);
}

TEST_CASE("SLD eigenbases are mutually unbiased and aligned") {
  SampleParams p(0.5, 0.0, 1.0);
  ProjectiveMeasurement bt = sld_eigenbasis(p, Which::transmission);
  ProjectiveMeasurement bp = sld_eigenbasis(p, Which::phase);
  CHECK((bt.axis() - Vector3::UnitX()).norm() < 1e-12);
  CHECK((bp.axis() - Vector3::UnitY()).norm() < 1e-12);

  for (double phi : kGridPhi) {
    SampleParams q(0.7, phi, 2.0);
    ProjectiveMeasurement mt = sld_eigenbasis(q, Which::transmission);
    ProjectiveMeasurement mp = sld_eigenbasis(q, Which::phase);
    // Mutually unbiased bases: every cross overlap has |.|^2 = 1/2.
    for (const Vector2& a : {mt.ket_plus(), mt.ket_minus()})
      for (const Vector2& b : {mp.ket_plus(), mp.ket_minus()}) {
        CHECK(std::norm(a.dot(b)) == doctest::Approx(0.5).epsilon(1e-12));
      }
    // The eigenbasis diagonalises its SLD.
    Matrix2 lt = sld(q, Which::transmission).matrix();
    std::complex<double> off = mt.ket_minus().dot(lt * mt.ket_plus());
    CHECK(std::abs(off) < 1e-12);
    // Outcome probabilities in the transmission basis: (1 +/- t^n)/2,
    // independent of phi.
    Matrix2 rho = signal_state(q).matrix();
    double p_plus = (rho * mt.projector_plus()).trace().real();
    CHECK(p_plus == doctest::Approx(0.5 * (1.0 + q.tn())).epsilon(1e-12));
  }
}

TEST_CASE("measurement validation") {
  Vector2 e0 = Vector2::Unit(0), e1 = Vector2::Unit(1);
  CHECK_NOTHROW(ProjectiveMeasurement(e0, e1));
  CHECK_THROWS_AS(ProjectiveMeasurement(e0, 0.5 * e1), DomainError);
  CHECK_THROWS_AS(ProjectiveMeasurement(e0, e0), DomainError);
  CHECK_THROWS_AS(ProjectiveMeasurement::along_axis(Vector3::Zero()),
                  DomainError);
  // Axis round trip, including normalisation.
  Vector3 axis(0.3, -0.4, 0.5);
  ProjectiveMeasurement m = ProjectiveMeasurement::along_axis(axis);
  CHECK((m.axis() - axis.normalized()).norm() < 1e-12);
  Matrix2 sum = m.projector_plus() + m.projector_minus();
  CHECK((sum - Matrix2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("POVM validation") {
  Matrix2 id = Matrix2::Identity();
  CHECK_NOTHROW(Povm({0.5 * id, 0.5 * id}));
  CHECK_NOTHROW(Povm({id, Matrix2::Zero()}));
  CHECK_THROWS_AS(Povm({0.5 * id, 0.25 * id}), DomainError);
  Matrix2 negative;
  negative << -0.25, 0.0, 0.0, 0.25;
  CHECK_THROWS_AS(Povm({negative, id - negative}), DomainError);
  CHECK_THROWS_AS(Povm(std::vector<Matrix2>{}), DomainError);
}

TEST_CASE("CFI saturation by the SLD eigenbases") {
  for (double t : kGridT)
    for (double n : kGridN) {
      SampleParams p(t, 0.7, n);
      FisherMatrix f = qfi_matrix(p);
      double ct = cfi(p, sld_eigenbasis(p, Which::transmission),
                      Which::transmission, p.phi);
      double cp = cfi(p, sld_eigenbasis(p, Which::phase), Which::phase,
                      p.phi);
      CHECK(ct == doctest::Approx(f(0, 0)).epsilon(1e-10));
      CHECK(cp == doctest::Approx(f(1, 1)).epsilon(1e-10));
    }
}

TEST_CASE("phase basis carries no transmission information") {
  SampleParams p(0.5, 0.0, 1.0);
  double c = cfi(p, sld_eigenbasis(p, Which::phase), Which::transmission,
                 p.phi);
  CHECK(c == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("classical Fisher matrix of simple POVMs") {
  SampleParams p(0.5, 0.3, 2.0);
  // The trivial measurement learns nothing.
  FisherMatrix none = cfi_matrix(
      p, Povm({Matrix2::Identity(), Matrix2::Zero()}));
  CHECK(none.cwiseAbs().maxCoeff() == 0.0);
  // Splitting shots between the two SLD bases scales each diagonal entry.
  FisherMatrix f = qfi_matrix(p);
  ProjectiveMeasurement bt = sld_eigenbasis(p, Which::transmission);
  ProjectiveMeasurement bp = sld_eigenbasis(p, Which::phase);
  double lambda = 0.37;
  FisherMatrix split = cfi_matrix(
      p, Povm({lambda * bt.projector_plus(), lambda * bt.projector_minus(),
               (1.0 - lambda) * bp.projector_plus(),
               (1.0 - lambda) * bp.projector_minus()}));
  CHECK(split(0, 0) == doctest::Approx(lambda * f(0, 0)).epsilon(1e-12));
  CHECK(split(1, 1) ==
        doctest::Approx((1.0 - lambda) * f(1, 1)).epsilon(1e-12));
  CHECK(std::abs(split(0, 1)) < 1e-12 * std::max(f(0, 0), f(1, 1)));
}

TEST_CASE("brute-force measurement scan attains the QFI") {
  SampleParams a(0.5, 0.0, 1.0);
  double bt = cfi_bruteforce_max(a, Which::transmission);
  CHECK(bt == doctest::Approx(4.0 / 3.0).epsilon(1e-3));
  CHECK(bt <= 4.0 / 3.0 + 1e-9);

  SampleParams b(0.8, 0.0, 2.0);
  double bp = cfi_bruteforce_max(b, Which::phase);
  CHECK(bp == doctest::Approx(1.6384).epsilon(2e-3));
  CHECK(bp <= qfi_matrix(b)(1, 1) + 1e-9);

  for (double t : {0.3, 0.9})
    for (double n : {0.5, 5.0}) {
      SampleParams p(t, 0.7, n);
      FisherMatrix f = qfi_matrix(p);
      for (Which w : {Which::transmission, Which::phase}) {
        double q = w == Which::transmission ? f(0, 0) : f(1, 1);
        double got = cfi_bruteforce_max(p, w);
        CHECK(got <= q + 1e-9);
        CHECK(got >= 0.999 * q);
      }
    }
}

TEST_CASE("phase-scan information") {
  CHECK_THROWS_AS(phase_scan_cfi(0.8, 0.0, 1), DomainError);
  // Vanishing transmission: the denominators drop out and the cosine-squared
  // sum over a quarter-period grid is exactly M/2.
  CHECK(phase_scan_cfi(1e-6, 0.3, 4) == doctest::Approx(2.0).epsilon(1e-9));

  double limit = phase_scan_cfi_limit(0.8);
  CHECK(limit == doctest::Approx(1.0416666666666667).epsilon(1e-14));
  CHECK(phase_scan_cfi(0.8, 0.0, 10000) / 10000.0 ==
        doctest::Approx(limit).epsilon(1e-12));
  // Empirical convergence is at least as fast as O(1/M).
  for (int m : {16, 64, 512}) {
    double rel = std::abs(phase_scan_cfi(0.8, 0.0, m) / m / limit - 1.0);
    CHECK(rel <= 1.0 / m);
  }
  // Setting-phase independence in the dense-scan limit.
  double a = phase_scan_cfi(0.8, 0.0, 100000);
  double b = phase_scan_cfi(0.8, 1.1, 100000);
  CHECK(a == doctest::Approx(b).epsilon(1e-6));
}

TEST_CASE("phase-scan limit ratio to the QFI") {
  // F_Q(t) / Fbar_C(t) = 1 + 1/sqrt(1 - t^2): -> 2 as t -> 0 and grows
  // without bound as t -> 1; it crosses 10 at t = sqrt(80)/9.
  auto ratio = [](double t) {
    return 1.0 / ((1.0 - t) * (1.0 + t)) / phase_scan_cfi_limit(t);
  };
  CHECK(ratio(1e-6) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(ratio(0.01) == doctest::Approx(2.000050003750313).epsilon(1e-12));
  CHECK(ratio(0.9938079899999065) == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(ratio(0.975) < 10.0);
  CHECK(ratio(0.995) > 10.0);
  double prev = 0.0;
  for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    double r = ratio(t);
    CHECK(r > 1.0);
    CHECK(r > prev);
    prev = r;
  }
}

}  // TEST_SUITE
