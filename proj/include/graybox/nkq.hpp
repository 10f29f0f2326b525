#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "graybox/landscape.hpp"

namespace graybox {

// Random NKQ landscape: one subfunction per variable, subfunction l depends on
// x_l plus K distinct other variables drawn uniformly without replacement,
// table entries uniform in [0, Q-1]. Byte-reproducible from the seed.
MkLandscape generate_nkq(int n, int K, int Q, std::uint64_t seed);

// Plain-text instance format so NKQ instances are portable:
//   nkq <n> <K> <Q> <seed>
//   <v_0> ... <v_K>  <t_0> ... <t_{2^(K+1)-1}>     (one line per subfunction)
// Variable v_0 is the subfunction's own index; bit j of the table index is
// the value of v_j.
void write_nkq(std::ostream& out, const MkLandscape& landscape, int K, int Q,
               std::uint64_t seed);
MkLandscape read_nkq(std::istream& in);

// FNV-1a digest of the canonical text serialization, for quick identity checks.
std::string nkq_digest(const MkLandscape& landscape, int K, int Q, std::uint64_t seed);

} // namespace graybox
