#include "calderon/laplace.hpp"

#include <cmath>
#include <stdexcept>

namespace calderon {

const char* to_string(OperatorTag t) {
  switch (t) {
    case OperatorTag::V: return "V";
    case OperatorTag::K: return "K";
    case OperatorTag::Kp: return "Kp";
    case OperatorTag::W: return "W";
    case OperatorTag::Wm: return "Wm";
    case OperatorTag::Wtilde: return "Wtilde";
    case OperatorTag::Mass: return "M";
    case OperatorTag::E: return "E";
    case OperatorTag::H: return "H";
    case OperatorTag::MassSNC: return "MassSNC";
  }
  return "?";
}

namespace {

constexpr double kInv4Pi = 1.0 / (4.0 * kPi);

enum Parts : unsigned { kV = 1, kK = 2, kW = 4, kWt = 8 };

struct LaplaceBlock {
  double v = 0.0;
  double k[3] = {0, 0, 0};
  double gi = 0.0;
  double gi_ab[3][3] = {};
};

void check_finite(double x) {
  if (!std::isfinite(x)) throw std::runtime_error("non-finite value in Laplace assembly");
}

struct LaplacePass {
  RealMatrix V, K, W, Wt;
};

LaplacePass laplace_pass(const Mesh& mesh, const QuadratureOptions& opts, unsigned parts) {
  const PairQuadrature quad(opts);
  const std::size_t np = mesh.panel_count(), nv = mesh.vertex_count();
  const auto& geo = mesh.geometry();
  LaplacePass out;
  if (parts & kV) out.V = RealMatrix::Zero(np, np);
  if (parts & kK) out.K = RealMatrix::Zero(np, nv);
  if (parts & kW) out.W = RealMatrix::Zero(nv, nv);
  if (parts & kWt) out.Wt = RealMatrix::Zero(nv, nv);
  const bool need_v = parts & (kV | kW);

  auto compute = [&](std::size_t a, std::size_t b, LaplaceBlock& blk) {
    const PairClass pc = classify_pair(mesh, a, b);
    const Vec3& nb = geo[b].normal;
    quad.for_each_point(geo[a], geo[b], pc,
                        [&](const Vec3& x, const Vec3& y, const std::array<double, 3>& lx,
                            const std::array<double, 3>& ly, double w) {
                          const Vec3 d = x - y;
                          const double r = d.norm();
                          const double g = kInv4Pi / r;
                          if (need_v) blk.v += w * g;
                          if (parts & kK) {
                            const double kern = w * g * d.dot(nb) / (r * r);
                            for (int j = 0; j < 3; ++j) blk.k[j] += kern * ly[j];
                          }
                          if (parts & kWt) {
                            const double gy = w * g * std::exp(-r);
                            blk.gi += gy;
                            for (int i = 0; i < 3; ++i)
                              for (int j = 0; j < 3; ++j) blk.gi_ab[i][j] += gy * lx[i] * ly[j];
                          }
                        });
    check_finite(blk.v + blk.k[0] + blk.k[1] + blk.k[2] + blk.gi);
  };

  auto scatter = [&](std::size_t a, std::size_t b, const LaplaceBlock& blk) {
    const auto& ta = mesh.panels()[a];
    const auto& tb = mesh.panels()[b];
    if (parts & kK)
      for (int j = 0; j < 3; ++j) out.K(a, tb[j]) += blk.k[j];
    // V, W and Wtilde are symmetric: take the a <= b block and mirror it
    if (b < a) return;
    if (parts & kV) out.V(a, b) = out.V(b, a) = blk.v;
    if (parts & (kW | kWt)) {
      const double nn = geo[a].normal.dot(geo[b].normal);
      for (int i = 0; i < 3; ++i) {
        const Vec3 ca = p1_surface_curl(geo[a], i);
        for (int j = 0; j < 3; ++j) {
          const double cc = ca.dot(p1_surface_curl(geo[b], j));
          if (parts & kW) {
            out.W(ta[i], tb[j]) += cc * blk.v;
            if (a != b) out.W(tb[j], ta[i]) += cc * blk.v;
          }
          if (parts & kWt) {
            const double wt = cc * blk.gi + nn * blk.gi_ab[i][j];
            out.Wt(ta[i], tb[j]) += wt;
            if (a != b) out.Wt(tb[j], ta[i]) += wt;
          }
        }
      }
    }
  };

  assemble_panel_pairs<LaplaceBlock>(np, compute, scatter, !(parts & kK));
  return out;
}

void require(const SpacePtr& s, SpaceKind k, const char* what) {
  if (!s || s->kind() != k) throw std::invalid_argument(what);
}

}  // namespace

RealGalerkin assemble_single_layer(const SpacePtr& p0, const QuadratureOptions& q) {
  require(p0, SpaceKind::P0, "single layer needs a P0 space");
  return {laplace_pass(p0->mesh(), q, kV).V, p0, p0, OperatorTag::V};
}

RealGalerkin assemble_double_layer(const SpacePtr& p0, const SpacePtr& p1, const QuadratureOptions& q) {
  require(p0, SpaceKind::P0, "double layer test space must be P0");
  require(p1, SpaceKind::P1, "double layer trial space must be P1");
  return {laplace_pass(p0->mesh(), q, kK).K, p0, p1, OperatorTag::K};
}

RealGalerkin assemble_adjoint_double_layer(const SpacePtr& p1, const SpacePtr& p0,
                                           const QuadratureOptions& q) {
  require(p1, SpaceKind::P1, "adjoint double layer test space must be P1");
  require(p0, SpaceKind::P0, "adjoint double layer trial space must be P0");
  const Mesh& mesh = p1->mesh();
  const PairQuadrature quad(q);
  const auto& geo = mesh.geometry();
  RealMatrix kp = RealMatrix::Zero(mesh.vertex_count(), mesh.panel_count());
  struct Block { double k[3] = {0, 0, 0}; };
  // Loop order (trial panel, test panel) so the quadrature nodes coincide
  // with those of the double layer.
  auto compute = [&](std::size_t b, std::size_t a, Block& blk) {
    const PairClass pc = classify_pair(mesh, b, a);
    const Vec3& na = geo[a].normal;
    quad.for_each_point(geo[b], geo[a], pc,
                        [&](const Vec3& y, const Vec3& x, const std::array<double, 3>&,
                            const std::array<double, 3>& lx, double w) {
                          const Vec3 d = x - y;
                          const double r = d.norm();
                          const double kern = -w * kInv4Pi * d.dot(na) / (r * r * r);
                          for (int i = 0; i < 3; ++i) blk.k[i] += kern * lx[i];
                        });
    check_finite(blk.k[0] + blk.k[1] + blk.k[2]);
  };
  auto scatter = [&](std::size_t b, std::size_t a, const Block& blk) {
    const auto& ta = mesh.panels()[a];
    for (int i = 0; i < 3; ++i) kp(ta[i], b) += blk.k[i];
  };
  assemble_panel_pairs<Block>(mesh.panel_count(), compute, scatter);
  return {kp, p1, p0, OperatorTag::Kp};
}

RealGalerkin assemble_hypersingular(const SpacePtr& p1, const QuadratureOptions& q) {
  require(p1, SpaceKind::P1, "hypersingular operator needs a P1 space");
  return {laplace_pass(p1->mesh(), q, kW).W, p1, p1, OperatorTag::W};
}

RealVector p1_integrals(const FunctionSpace& p1) {
  const Mesh& mesh = p1.mesh();
  RealVector a = RealVector::Zero(mesh.vertex_count());
  for (std::size_t p = 0; p < mesh.panel_count(); ++p) {
    for (int v : mesh.panels()[p]) a(v) += mesh.geometry()[p].area / 3.0;
  }
  return a;
}

RealGalerkin stabilize_hypersingular(const RealGalerkin& w) {
  const RealVector a = p1_integrals(*w.test);
  RealGalerkin out = w;
  out.data += a * a.transpose();
  out.tag = OperatorTag::Wm;
  return out;
}

RealGalerkin assemble_w_tilde(const SpacePtr& p1, const QuadratureOptions& q) {
  require(p1, SpaceKind::P1, "W tilde needs a P1 space");
  return {laplace_pass(p1->mesh(), q, kWt).Wt, p1, p1, OperatorTag::Wtilde};
}

LaplaceOperators assemble_laplace(std::shared_ptr<const Mesh> mesh, const QuadratureOptions& q) {
  LaplaceOperators ops;
  ops.p0 = make_space(mesh, SpaceKind::P0);
  ops.p1 = make_space(mesh, SpaceKind::P1);
  LaplacePass pass = laplace_pass(*mesh, q, kV | kK | kW | kWt);
  ops.V = {std::move(pass.V), ops.p0, ops.p0, OperatorTag::V};
  ops.K = {std::move(pass.K), ops.p0, ops.p1, OperatorTag::K};
  ops.W = {std::move(pass.W), ops.p1, ops.p1, OperatorTag::W};
  ops.Wtilde = {std::move(pass.Wt), ops.p1, ops.p1, OperatorTag::Wtilde};
  ops.Kp = assemble_adjoint_double_layer(ops.p1, ops.p0, q);
  ops.Wm = stabilize_hypersingular(ops.W);
  ops.M01 = mass_matrix(*ops.p0, *ops.p1);
  ops.M10 = ops.M01.transpose();
  return ops;
}

}  // namespace calderon
