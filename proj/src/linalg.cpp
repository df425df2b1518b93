#include "calderon/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace calderon {

namespace {

void check_square(long rows, long cols, long n) {
  if (rows != cols || rows != n) throw std::invalid_argument("matrix/vector dimension mismatch");
}

}  // namespace

SolveResult cg(const RealMatrix& a, const ComplexVector& b, double tol, int max_iter) {
  check_square(a.rows(), a.cols(), b.size());
  const long n = b.size();
  if (max_iter <= 0) max_iter = static_cast<int>(5 * n);
  SolveResult res;
  res.method = "cg";
  res.x = ComplexVector::Zero(n);
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    res.converged = true;
    return res;
  }
  ComplexVector r = b;
  ComplexVector p = r;
  double rr = r.squaredNorm();
  for (int it = 1; it <= max_iter; ++it) {
    const ComplexVector ap = a * p;
    const cplx pap = p.dot(ap);
    if (pap.real() <= 0.0 || !std::isfinite(pap.real())) {
      // not positive definite along p
      res.iterations = it;
      res.residual = std::sqrt(rr) / bnorm;
      return res;
    }
    const cplx alpha = rr / pap;
    res.x += alpha * p;
    r -= alpha * ap;
    const double rr_new = r.squaredNorm();
    res.iterations = it;
    res.residual = std::sqrt(rr_new) / bnorm;
    if (res.residual <= tol) {
      res.converged = true;
      return res;
    }
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  return res;
}

SolveResult gmres(const ComplexMatrix& a, const ComplexVector& b, double tol, int max_iter) {
  check_square(a.rows(), a.cols(), b.size());
  const long n = b.size();
  if (max_iter <= 0) max_iter = static_cast<int>(std::min<long>(5 * n, n + 10));
  SolveResult res;
  res.method = "gmres";
  res.x = ComplexVector::Zero(n);
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    res.converged = true;
    return res;
  }
  const int m = max_iter;
  std::vector<ComplexVector> q;
  q.reserve(m + 1);
  q.push_back(b / bnorm);
  ComplexMatrix h = ComplexMatrix::Zero(m + 1, m);
  std::vector<cplx> cs(m), sn(m);
  ComplexVector g = ComplexVector::Zero(m + 1);
  g(0) = bnorm;
  int k = 0;
  for (; k < m; ++k) {
    ComplexVector w = a * q[k];
    for (int j = 0; j <= k; ++j) {
      h(j, k) = q[j].dot(w);
      w -= h(j, k) * q[j];
    }
    const double hn = w.norm();
    h(k + 1, k) = hn;
    for (int j = 0; j < k; ++j) {
      const cplx t = std::conj(cs[j]) * h(j, k) + std::conj(sn[j]) * h(j + 1, k);
      h(j + 1, k) = -sn[j] * h(j, k) + cs[j] * h(j + 1, k);
      h(j, k) = t;
    }
    const double denom = std::hypot(std::abs(h(k, k)), hn);
    if (denom == 0.0) break;
    cs[k] = h(k, k) / denom;
    sn[k] = hn / denom;
    h(k, k) = denom;
    h(k + 1, k) = 0.0;
    g(k + 1) = -sn[k] * g(k);
    g(k) = std::conj(cs[k]) * g(k);
    res.iterations = k + 1;
    res.residual = std::abs(g(k + 1)) / bnorm;
    if (res.residual <= tol || hn == 0.0) {
      ++k;
      break;
    }
    q.push_back(w / hn);
  }
  // back substitution on the k x k triangle
  ComplexVector y = h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
  for (int j = 0; j < k; ++j) res.x += y(j) * q[j];
  res.residual = (b - a * res.x).norm() / bnorm;
  res.converged = res.residual <= tol * 10.0 && std::isfinite(res.residual);
  return res;
}

ComplexVector direct_solve(const ComplexMatrix& a, const ComplexVector& b) {
  check_square(a.rows(), a.cols(), b.size());
  const Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double rcond = pivots.minCoeff() > 0.0 ? lu.rcond() : 0.0;
  if (!(rcond > 1e-14)) throw SingularMatrixError("singular matrix in direct solve");
  return lu.solve(b);
}

SolveResult solve_symmetric(const RealMatrix& a, const ComplexVector& b, double tol) {
  SolveResult res = cg(a, b, tol);
  if (res.converged) return res;
  SolveResult d;
  d.method = "lu";
  d.x = direct_solve(a.cast<cplx>(), b);
  d.iterations = res.iterations;
  d.residual = (b - a * d.x).norm() / std::max(b.norm(), 1e-300);
  d.converged = std::isfinite(d.residual);
  return d;
}

SolveResult solve_general(const ComplexMatrix& a, const ComplexVector& b, double tol) {
  SolveResult res = gmres(a, b, tol);
  if (res.converged) return res;
  SolveResult d;
  d.method = "lu";
  d.x = direct_solve(a, b);
  d.iterations = res.iterations;
  d.residual = (b - a * d.x).norm() / std::max(b.norm(), 1e-300);
  d.converged = std::isfinite(d.residual);
  return d;
}

RealVector symmetric_eigenvalues(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  const double scale = a.cwiseAbs().rowwise().sum().maxCoeff();
  if ((a - a.transpose()).cwiseAbs().rowwise().sum().maxCoeff() > 1e-8 * scale) {
    throw std::invalid_argument("eigenvalues of a non-symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
  return es.eigenvalues();
}

double energy_norm(const RealMatrix& a, const ComplexVector& x) {
  const ComplexVector ax = a * x;
  return std::sqrt(std::abs((x.array() * ax.array()).sum()));
}

double energy_norm(const ComplexMatrix& a, const ComplexVector& x) {
  const ComplexVector ax = a * x;
  return std::sqrt(std::abs((x.array() * ax.array()).sum()));
}

}  // namespace calderon
