#include <gtest/gtest.h>

#include <complex>

#include "calderon/laplace.hpp"
#include "calderon/linalg.hpp"
#include "calderon/maxwell.hpp"

using namespace calderon;

namespace {

std::shared_ptr<const Mesh> cube1() {
  static const auto mesh = std::make_shared<const Mesh>(make_cube_mesh(1));
  return mesh;
}

// Divergence map RWG -> P0: div b_j restricted to panel p.
RealMatrix divergence_map(const FunctionSpace& rwg) {
  const Mesh& m = rwg.mesh();
  RealMatrix d = RealMatrix::Zero(m.panel_count(), rwg.dof_count());
  for (std::size_t p = 0; p < m.panel_count(); ++p) {
    const LocalDofs& ld = rwg.local(p);
    for (int i = 0; i < 3; ++i) d(p, ld.dof[i]) += rwg_divergence(m.geometry()[p], i, ld.sign[i]);
  }
  return d;
}

}  // namespace

TEST(Efie, SymmetricNotHermitian) {
  const MaxwellOperators ops = assemble_maxwell(cube1(), 1.0);
  const ComplexMatrix& e = ops.E.data;
  EXPECT_LT((e - e.transpose()).cwiseAbs().maxCoeff(), 1e-8 * e.cwiseAbs().maxCoeff());
  EXPECT_GT((e - e.adjoint()).norm() / e.norm(), 1e-2);
}

TEST(Efie, ImaginaryWavenumberGivesPositiveDefiniteRealMatrix) {
  const ComplexGalerkin e = assemble_efie(make_space(cube1(), SpaceKind::RWG), cplx(0.0, 1.0));
  EXPECT_LT(e.data.imag().cwiseAbs().maxCoeff(), 1e-14 * e.data.real().cwiseAbs().maxCoeff());
  EXPECT_GT(e.data.real().diagonal().minCoeff(), 0.0);
  const RealMatrix r = e.data.real();
  EXPECT_GT(symmetric_eigenvalues(0.5 * (r + r.transpose())).minCoeff(), 0.0);
}

TEST(Efie, BasisNormOnCentreSplitCube) {
  // max diag of E at k = i on the 24/96/384-panel cube: 4.153e-1, 2.373e-1, 1.174e-1
  const double expected[] = {4.153e-1, 2.373e-1, 1.174e-1};
  Mesh m = make_cube_mesh(1, CubeSplit::Centre);
  for (double ref : expected) {
    const auto mesh = std::make_shared<const Mesh>(m);
    const ComplexGalerkin e = assemble_efie(make_space(mesh, SpaceKind::RWG), cplx(0.0, 1.0));
    EXPECT_NEAR(e.data.diagonal().real().maxCoeff(), ref, 0.01 * ref);
    m = refine(m);
  }
}

TEST(Efie, StaticLimitIsLaplaceSingleLayerOfDivergence) {
  const SpacePtr rwg = make_space(cube1(), SpaceKind::RWG);
  const SpacePtr p0 = make_space(cube1(), SpaceKind::P0);
  const double k = 1e-4;
  const ComplexGalerkin e = assemble_efie(rwg, k);
  const RealMatrix d = divergence_map(*rwg);
  const RealMatrix v = assemble_single_layer(p0).data;
  const RealMatrix ref = d.transpose() * v * d;
  const ComplexMatrix scaled = cplx(0.0, -k) * e.data;
  EXPECT_LT((scaled.real() - ref).norm() / ref.norm(), 1e-6);
}

TEST(Mfie, SymmetricAndQuadratureConverged) {
  const SpacePtr rwg = make_space(cube1(), SpaceKind::RWG);
  const ComplexMatrix h4 = assemble_mfie(rwg, 2.0, {4, 4}).data;
  const ComplexMatrix h8 = assemble_mfie(rwg, 2.0, {8, 8}).data;
  EXPECT_LT((h4 - h4.transpose()).cwiseAbs().maxCoeff(), 1e-8 * h4.cwiseAbs().maxCoeff());
  EXPECT_LT((h4 - h8).norm() / h8.norm(), 2e-3);
}

TEST(Mfie, ImaginaryWavenumberIsReal) {
  const ComplexGalerkin h = assemble_mfie(make_space(cube1(), SpaceKind::RWG), cplx(0.0, 1.5));
  EXPECT_LT(h.data.imag().cwiseAbs().maxCoeff(), 1e-14 * h.data.real().cwiseAbs().maxCoeff());
}

TEST(TwistedMass, AntisymmetricAndExact) {
  const SpacePtr rwg = make_space(cube1(), SpaceKind::RWG);
  const SpacePtr snc = make_space(cube1(), SpaceKind::SNC);
  const RealMatrix m = assemble_snc_rwg_mass(snc, rwg).data;
  EXPECT_LT((m + m.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_TRUE((m - mass_matrix(*snc, *rwg)).cwiseAbs().maxCoeff() < 1e-14);
  // n x b is orthogonal to b pointwise, so the diagonal vanishes
  EXPECT_LT(m.diagonal().cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Assembly, CombinedMatchesIndividual) {
  const MaxwellOperators ops = assemble_maxwell(cube1(), 1.0);
  EXPECT_EQ((assemble_efie(ops.rwg, 1.0).data - ops.E.data).norm(), 0.0);
  EXPECT_EQ((assemble_mfie(ops.rwg, 1.0).data - ops.H.data).norm(), 0.0);
  EXPECT_THROW(assemble_efie(make_space(cube1(), SpaceKind::P1), 1.0), std::invalid_argument);
  EXPECT_EQ(ops.E.tag, OperatorTag::E);
}

TEST(HelmholtzKernel, ReducesToLaplace) {
  EXPECT_NEAR(std::abs(helmholtz_kernel(0.0, 0.5) - 1.0 / (4.0 * kPi * 0.5)), 0.0, 1e-16);
  EXPECT_NEAR(helmholtz_kernel(cplx(0.0, 1.0), 1.0).imag(), 0.0, 1e-16);
}
