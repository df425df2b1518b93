#pragma once

#include <string>
#include <vector>

#include "calderon/spaces.hpp"
#include "calderon/types.hpp"

namespace calderon {

enum class OperatorTag { V, K, Kp, W, Wm, Wtilde, Mass, E, H, MassSNC };

const char* to_string(OperatorTag t);

/// Dense Galerkin matrix with its test and trial spaces.
template <typename Scalar>
struct GalerkinMatrix {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> data;
  SpacePtr test;
  SpacePtr trial;
  OperatorTag tag = OperatorTag::V;
};

using RealGalerkin = GalerkinMatrix<double>;
using ComplexGalerkin = GalerkinMatrix<cplx>;

/// Loops over all ordered panel pairs (test panel a, trial panel b), or only
/// over b >= a when `upper_only` is set. The compute step runs in parallel
/// over test panels and fills one block per trial panel; the scatter step
/// runs in test-panel order so sums are bitwise reproducible.
template <typename Block, typename Compute, typename Scatter>
void assemble_panel_pairs(std::size_t panels, Compute&& compute, Scatter&& scatter,
                          bool upper_only = false) {
  const long n = static_cast<long>(panels);
#pragma omp parallel
  {
    std::vector<Block> row(panels);
#pragma omp for ordered schedule(dynamic, 1)
    for (long a = 0; a < n; ++a) {
      const std::size_t first = upper_only ? static_cast<std::size_t>(a) : 0;
      for (std::size_t b = first; b < panels; ++b) {
        row[b] = Block{};
        compute(static_cast<std::size_t>(a), b, row[b]);
      }
#pragma omp ordered
      for (std::size_t b = first; b < panels; ++b) scatter(static_cast<std::size_t>(a), b, row[b]);
    }
  }
}

}  // namespace calderon
