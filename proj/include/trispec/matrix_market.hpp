#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "trispec/incidence.hpp"

namespace trispec {

// MatrixMarket "coordinate integer general" files, 1-based indices, one line
// per nonzero in row-major order.

void write_matrix_market(std::ostream& out, const IntMatrix& m, const std::string& comment = {});
IntMatrix read_matrix_market(std::istream& in);

}  // namespace trispec
