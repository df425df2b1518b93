#pragma once

#include <iosfwd>
#include <string>

#include "calderon/mesh.hpp"
#include "calderon/types.hpp"

namespace calderon {

void write_off(std::ostream& os, const Mesh& mesh);
void write_off(const std::string& path, const Mesh& mesh);
Mesh read_off(std::istream& is, Domain domain, int level = 0);
Mesh read_off(const std::string& path, Domain domain, int level = 0);

/// Full-precision CSV (one row per matrix row). Complex entries are written
/// as re+imj pairs in two columns each.
void write_matrix_csv(std::ostream& os, const RealMatrix& m);
void write_matrix_csv(std::ostream& os, const ComplexMatrix& m);

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

}  // namespace calderon
