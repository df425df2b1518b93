#pragma once

#include <cstdint>
#include <string>

#include "calderon/types.hpp"

namespace calderon {

/// Artificial diagonal errors:
///   A  diagonal replaced by uniform random numbers in [0, 10)
///   B  diagonal scaled by 0.5
///   C  diagonal scaled by 1e3
///   D  first ceil(N/2) diagonal entries scaled by 1e3
///   E  diagonal scaled by 1/h
enum class FaultKind { None, A, B, C, D, E };

const char* to_string(FaultKind k);
FaultKind parse_fault(const std::string& s);

struct FaultSpec {
  FaultKind kind = FaultKind::None;
  std::uint64_t seed = 0;  // used by A
  double h = 0.0;          // meshwidth used by E
};

RealMatrix apply_fault(const RealMatrix& m, const FaultSpec& f);
ComplexMatrix apply_fault(const ComplexMatrix& m, const FaultSpec& f);

}  // namespace calderon
