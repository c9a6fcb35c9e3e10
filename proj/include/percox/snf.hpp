#pragma once

#include "percox/common.hpp"

namespace percox {

using ZMat = std::vector<std::vector<BigInt>>;

// Invariant factors d1 | d2 | ... (nonzero diagonal of the Smith form).
std::vector<BigInt> smith_invariants(ZMat m);

// Integer basis of the (saturated) kernel lattice {x : m x = 0}.
std::vector<std::vector<BigInt>> integer_kernel(ZMat m);

// Does v lie in the lattice spanned by the rows of m?
bool in_row_lattice(ZMat m, const std::vector<BigInt>& v);

// Finitely generated abelian group Z^free_rank + sum Z/torsion_i.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion; // invariant factors > 1, divisibility order
  bool operator==(const AbelianGroup&) const = default;
  std::string str() const;
};

// H1 of a 2-complex: nobj vertices, arrows (src,dst), relation exponent
// vectors in Z^arrows (each must lie in ker d1).
AbelianGroup complex_h1(int nobj, const std::vector<std::pair<int, int>>& arrows,
                        const std::vector<std::vector<long long>>& relations);

} // namespace percox
