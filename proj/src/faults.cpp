#include "calderon/faults.hpp"

#include <random>
#include <stdexcept>

namespace calderon {

const char* to_string(FaultKind k) {
  switch (k) {
    case FaultKind::None: return "none";
    case FaultKind::A: return "A";
    case FaultKind::B: return "B";
    case FaultKind::C: return "C";
    case FaultKind::D: return "D";
    case FaultKind::E: return "E";
  }
  return "?";
}

FaultKind parse_fault(const std::string& s) {
  if (s == "none" || s == "None" || s.empty()) return FaultKind::None;
  if (s == "A") return FaultKind::A;
  if (s == "B") return FaultKind::B;
  if (s == "C") return FaultKind::C;
  if (s == "D") return FaultKind::D;
  if (s == "E") return FaultKind::E;
  throw std::invalid_argument("unknown fault '" + s + "'");
}

namespace {

template <typename M>
M apply(const M& m, const FaultSpec& f) {
  if (m.rows() != m.cols()) throw std::invalid_argument("faults apply to square matrices");
  M out = m;
  const Eigen::Index n = m.rows();
  switch (f.kind) {
    case FaultKind::None: break;
    case FaultKind::A: {
      std::mt19937_64 rng(f.seed);
      std::uniform_real_distribution<double> dist(0.0, 10.0);
      for (Eigen::Index i = 0; i < n; ++i) out(i, i) = dist(rng);
      break;
    }
    case FaultKind::B: out.diagonal() *= 0.5; break;
    case FaultKind::C: out.diagonal() *= 1e3; break;
    case FaultKind::D: out.diagonal().head((n + 1) / 2) *= 1e3; break;
    case FaultKind::E:
      if (!(f.h > 0.0)) throw std::invalid_argument("fault E needs a positive meshwidth");
      out.diagonal() /= f.h;
      break;
  }
  return out;
}

}  // namespace

RealMatrix apply_fault(const RealMatrix& m, const FaultSpec& f) { return apply(m, f); }
ComplexMatrix apply_fault(const ComplexMatrix& m, const FaultSpec& f) { return apply(m, f); }

}  // namespace calderon
