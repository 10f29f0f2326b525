#pragma once

#include <iosfwd>

#include "graybox/landscape.hpp"

namespace graybox {

enum class DimacsFormat { Cnf, Wcnf };

// DIMACS reader for MAX-SAT instances. Produces one clause subfunction per
// clause; unweighted clauses get weight 1, WCNF hard clauses keep the `top`
// weight as an ordinary very heavy soft clause. Total satisfied weight is
// maximized. Errors carry the offending line number.
MkLandscape parse_maxsat(std::istream& in, DimacsFormat format);

} // namespace graybox
