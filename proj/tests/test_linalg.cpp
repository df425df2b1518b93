#include <gtest/gtest.h>

#include <random>

#include "calderon/faults.hpp"
#include "calderon/laplace.hpp"
#include "calderon/maxwell.hpp"
#include "calderon/linalg.hpp"

using namespace calderon;

namespace {

RealMatrix spd(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  RealMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = d(rng);
  return b * b.transpose() + n * RealMatrix::Identity(n, n);
}

ComplexVector rhs(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  ComplexVector b(n);
  for (int i = 0; i < n; ++i) b(i) = cplx(d(rng), d(rng));
  return b;
}

}  // namespace

TEST(ConjugateGradient, SolvesSpdSystem) {
  const RealMatrix a = spd(40, 1);
  const ComplexVector b = rhs(40, 2);
  const SolveResult r = cg(a, b, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.method, "cg");
  EXPECT_LE(r.iterations, 40 * 5);
  EXPECT_LT((a.cast<cplx>() * r.x - b).norm() / b.norm(), 1e-11);
}

TEST(ConjugateGradient, ZeroRightHandSide) {
  const SolveResult r = cg(spd(5, 3), ComplexVector::Zero(5));
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.x.norm(), 0.0);
}

TEST(ConjugateGradient, IndefiniteMatrixFallsBackToLu) {
  RealMatrix a = RealMatrix::Identity(4, 4);
  a(2, 2) = -3.0;
  const ComplexVector b = rhs(4, 4);
  const SolveResult r = solve_symmetric(a, b);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.method, "lu");
  EXPECT_LT((a.cast<cplx>() * r.x - b).norm(), 1e-12);
}

TEST(Gmres, SolvesNonsymmetricComplexSystem) {
  const int n = 30;
  ComplexMatrix a = spd(n, 5).cast<cplx>();
  a(0, n - 1) += cplx(2.0, -1.0);
  a(3, 7) -= cplx(0.0, 4.0);
  const ComplexVector b = rhs(n, 6);
  const SolveResult r = gmres(a, b, 1e-12);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.method, "gmres");
  EXPECT_LT((a * r.x - b).norm() / b.norm(), 1e-11);
  EXPECT_LE(r.residual, 1e-12);
}

TEST(Gmres, ExactInAtMostNSteps) {
  const int n = 12;
  ComplexMatrix a = ComplexMatrix::Random(n, n) + 5.0 * ComplexMatrix::Identity(n, n);
  const SolveResult r = gmres(a, rhs(n, 7), 1e-13);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, n + 1);
}

TEST(Direct, SingularMatrixThrows) {
  ComplexMatrix a = ComplexMatrix::Identity(3, 3);
  a.row(2) = a.row(1);
  EXPECT_THROW(direct_solve(a, rhs(3, 8)), SingularMatrixError);
  RealMatrix z = RealMatrix::Zero(3, 3);
  EXPECT_THROW(solve_symmetric(z, rhs(3, 9)), SingularMatrixError);
}

TEST(Direct, DimensionMismatchThrows) {
  EXPECT_THROW(cg(spd(3, 1), rhs(4, 1)), std::invalid_argument);
}

TEST(Eigenvalues, AscendingOrder) {
  RealMatrix a = RealMatrix::Zero(3, 3);
  a.diagonal() << 3.0, -1.0, 2.0;
  const RealVector e = symmetric_eigenvalues(a);
  EXPECT_DOUBLE_EQ(e(0), -1.0);
  EXPECT_DOUBLE_EQ(e(1), 2.0);
  EXPECT_DOUBLE_EQ(e(2), 3.0);
}

TEST(EnergyNorm, DoesNotConjugate) {
  const RealMatrix id = RealMatrix::Identity(2, 2);
  ComplexVector x(2);
  x << cplx(0.0, 1.0), 0.0;
  // x^T x = -1
  EXPECT_DOUBLE_EQ(energy_norm(id, x), 1.0);
  x << 1.0, cplx(0.0, 1.0);
  EXPECT_DOUBLE_EQ(energy_norm(id, x), 0.0);
  x << 3.0, 4.0;
  EXPECT_DOUBLE_EQ(energy_norm(id, x), 5.0);
  const ComplexMatrix c = cplx(0.0, 2.0) * ComplexMatrix::Identity(2, 2);
  EXPECT_DOUBLE_EQ(energy_norm(c, x), std::sqrt(50.0));
}

TEST(ConjugateGradient, KrylovDimensionBound) {
  const ComplexVector b = rhs(3, 10);
  const SolveResult id = cg(RealMatrix::Identity(3, 3), b);
  EXPECT_EQ(id.iterations, 1);
  EXPECT_LT((id.x - b).norm(), 1e-15);
  RealMatrix d = RealMatrix::Zero(3, 3);
  d.diagonal() << 1.0, 2.0, 3.0;
  const SolveResult r = cg(d, b);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 3);
}

TEST(Gmres, IdentityAndRotation) {
  const ComplexVector b = rhs(2, 11);
  const SolveResult id = gmres(ComplexMatrix::Identity(2, 2), b);
  EXPECT_EQ(id.iterations, 1);
  ComplexMatrix rot(2, 2);
  rot << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  rot(0, 0) = 0.3;
  const SolveResult r = gmres(rot, b, 1e-13);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2);
}

TEST(Eigenvalues, TraceIdentityAndSymmetryCheck) {
  const RealMatrix a = spd(25, 12);
  EXPECT_NEAR(symmetric_eigenvalues(a).sum(), a.trace(), 1e-8 * a.trace());
  RealMatrix b = a;
  b(0, 1) += 1e-3 * a.norm();
  EXPECT_THROW(symmetric_eigenvalues(b), std::invalid_argument);
}

TEST(EnergyNorm, UnitVectorsPickDiagonal) {
  const RealMatrix a = spd(6, 13);
  for (int i = 0; i < 6; ++i) {
    const ComplexVector e = ComplexVector::Unit(6, i);
    EXPECT_NEAR(energy_norm(a, e), std::sqrt(a(i, i)), 1e-14);
  }
  EXPECT_EQ(energy_norm(a, ComplexVector::Zero(6)), 0.0);
}

TEST(Spectrum, HalvedDiagonalMakesSingleLayerIndefinite) {
  const auto mesh = std::make_shared<const Mesh>(make_cube_mesh(3));
  const RealMatrix v = assemble_single_layer(make_space(mesh, SpaceKind::P0)).data;
  EXPECT_GT(symmetric_eigenvalues(v)(0), 0.0);
  const RealMatrix bad = apply_fault(v, {FaultKind::B});
  EXPECT_LT(symmetric_eigenvalues(bad)(0), 0.0);
  const SolveResult r = cg(bad, ComplexVector::Ones(bad.rows()), 1e-10);
  EXPECT_FALSE(r.converged);
}

TEST(Gmres, CleanEfieConverges) {
  const auto mesh = std::make_shared<const Mesh>(make_cube_mesh(2, CubeSplit::Centre));
  const ComplexMatrix e = assemble_efie(make_space(mesh, SpaceKind::RWG), 1.0).data;
  ASSERT_EQ(mesh->panel_count(), 96u);
  const SolveResult r = gmres(e, rhs(static_cast<int>(e.rows()), 14), 1e-10);
  EXPECT_TRUE(r.converged);
}
