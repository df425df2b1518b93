#include "calderon/maxwell.hpp"

#include <stdexcept>

namespace calderon {

namespace {

enum Parts : unsigned { kE = 1, kH = 2 };

struct MaxwellBlock {
  cplx i0 = 0.0;
  cplx iab[3][3] = {};
  cplx hab[3][3] = {};
};

struct MaxwellPass {
  ComplexMatrix E, H;
};

MaxwellPass maxwell_pass(const FunctionSpace& rwg, cplx k, const QuadratureOptions& opts,
                         unsigned parts) {
  if (k == cplx(0.0)) throw std::invalid_argument("Maxwell operators need a nonzero wavenumber");
  const Mesh& mesh = rwg.mesh();
  const PairQuadrature quad(opts);
  const auto& geo = mesh.geometry();
  const std::size_t ne = mesh.edge_count();
  const cplx ik = cplx(0.0, 1.0) * k;
  MaxwellPass out;
  if (parts & kE) out.E = ComplexMatrix::Zero(ne, ne);
  if (parts & kH) out.H = ComplexMatrix::Zero(ne, ne);

  auto compute = [&](std::size_t a, std::size_t b, MaxwellBlock& blk) {
    const PairClass pc = classify_pair(mesh, a, b);
    const auto& va = geo[a].v;
    const auto& vb = geo[b].v;
    quad.for_each_point(geo[a], geo[b], pc,
                        [&](const Vec3& x, const Vec3& y, const std::array<double, 3>&,
                            const std::array<double, 3>&, double w) {
                          const Vec3 d = x - y;
                          const double r = d.norm();
                          const cplx g = w * std::exp(ik * r) / (4.0 * kPi * r);
                          std::array<Vec3, 3> xa, yb;
                          for (int i = 0; i < 3; ++i) {
                            xa[i] = x - va[i];
                            yb[i] = y - vb[i];
                          }
                          if (parts & kE) {
                            blk.i0 += g;
                            for (int i = 0; i < 3; ++i)
                              for (int j = 0; j < 3; ++j) blk.iab[i][j] += g * xa[i].dot(yb[j]);
                          }
                          if (parts & kH) {
                            // grad_x G = (x - y) (ik r - 1) G / r^2
                            const cplx gg = g * (ik * r - 1.0) / (r * r);
                            for (int i = 0; i < 3; ++i)
                              for (int j = 0; j < 3; ++j)
                                blk.hab[i][j] += gg * xa[i].dot(d.cross(yb[j]));
                          }
                        });
    if (!std::isfinite(std::abs(blk.i0)) || !std::isfinite(std::abs(blk.hab[0][0]))) {
      throw std::runtime_error("non-finite value in Maxwell assembly");
    }
  };

  auto scatter = [&](std::size_t a, std::size_t b, const MaxwellBlock& blk) {
    const LocalDofs& la = rwg.local(a);
    const LocalDofs& lb = rwg.local(b);
    for (int i = 0; i < 3; ++i) {
      const double ca = la.sign[i] * edge_length(geo[a], i) / (2.0 * geo[a].area);
      const double da = rwg_divergence(geo[a], i, la.sign[i]);
      for (int j = 0; j < 3; ++j) {
        const double cb = lb.sign[j] * edge_length(geo[b], j) / (2.0 * geo[b].area);
        const double db = rwg_divergence(geo[b], j, lb.sign[j]);
        // both forms are symmetric in (test, trial); pairs b > a fill the
        // mirrored entries too
        if (parts & kE) {
          const cplx e = -ik * ca * cb * blk.iab[i][j] - (da * db / ik) * blk.i0;
          out.E(la.dof[i], lb.dof[j]) += e;
          if (a != b) out.E(lb.dof[j], la.dof[i]) += e;
        }
        if (parts & kH) {
          const cplx h = ca * cb * blk.hab[i][j];
          out.H(la.dof[i], lb.dof[j]) += h;
          if (a != b) out.H(lb.dof[j], la.dof[i]) += h;
        }
      }
    }
  };

  assemble_panel_pairs<MaxwellBlock>(mesh.panel_count(), compute, scatter, true);
  return out;
}

void require_rwg(const SpacePtr& s) {
  if (!s || s->kind() != SpaceKind::RWG) throw std::invalid_argument("Maxwell operators need an RWG space");
}

}  // namespace

ComplexGalerkin assemble_efie(const SpacePtr& rwg, cplx k, const QuadratureOptions& q) {
  require_rwg(rwg);
  return {maxwell_pass(*rwg, k, q, kE).E, rwg, rwg, OperatorTag::E};
}

ComplexGalerkin assemble_mfie(const SpacePtr& rwg, cplx k, const QuadratureOptions& q) {
  require_rwg(rwg);
  return {maxwell_pass(*rwg, k, q, kH).H, rwg, rwg, OperatorTag::H};
}

RealGalerkin assemble_snc_rwg_mass(const SpacePtr& snc, const SpacePtr& rwg) {
  if (!snc || snc->kind() != SpaceKind::SNC) throw std::invalid_argument("test space must be SNC");
  require_rwg(rwg);
  return {mass_matrix(*snc, *rwg), snc, rwg, OperatorTag::MassSNC};
}

MaxwellOperators assemble_maxwell(std::shared_ptr<const Mesh> mesh, cplx k, const QuadratureOptions& q) {
  MaxwellOperators ops;
  ops.rwg = make_space(mesh, SpaceKind::RWG);
  ops.snc = make_space(mesh, SpaceKind::SNC);
  ops.k = k;
  MaxwellPass pass = maxwell_pass(*ops.rwg, k, q, kE | kH);
  ops.E = {std::move(pass.E), ops.rwg, ops.rwg, OperatorTag::E};
  ops.H = {std::move(pass.H), ops.rwg, ops.rwg, OperatorTag::H};
  ops.M = assemble_snc_rwg_mass(ops.snc, ops.rwg);
  return ops;
}

}  // namespace calderon
