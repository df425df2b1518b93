#pragma once

#include <stdexcept>
#include <string>

#include "calderon/types.hpp"

namespace calderon {

struct SolveResult {
  ComplexVector x;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  // final relative residual
  std::string method;
};

/// Conjugate gradients for Hermitian (here: real symmetric) A.
/// Stops when ||b - Ax|| <= tol ||b||; `max_iter` <= 0 means 5 n.
SolveResult cg(const RealMatrix& a, const ComplexVector& b, double tol = 1e-10, int max_iter = 0);

/// Full (unrestarted) GMRES with modified Gram-Schmidt and Givens rotations.
SolveResult gmres(const ComplexMatrix& a, const ComplexVector& b, double tol = 1e-10, int max_iter = 0);

/// LU with partial pivoting. Throws SingularMatrixError on a zero pivot.
ComplexVector direct_solve(const ComplexMatrix& a, const ComplexVector& b);

/// CG first, LU fallback if CG fails to converge.
SolveResult solve_symmetric(const RealMatrix& a, const ComplexVector& b, double tol = 1e-10);
/// GMRES first, LU fallback.
SolveResult solve_general(const ComplexMatrix& a, const ComplexVector& b, double tol = 1e-10);

/// Eigenvalues of a real symmetric matrix, ascending. Throws if
/// ||A - A^T||_inf > 1e-8 ||A||_inf.
RealVector symmetric_eigenvalues(const RealMatrix& a);

/// Energy norm sqrt|x^T A x| without complex conjugation.
double energy_norm(const RealMatrix& a, const ComplexVector& x);
double energy_norm(const ComplexMatrix& a, const ComplexVector& x);

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace calderon
