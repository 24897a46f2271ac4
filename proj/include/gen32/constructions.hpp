#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gen32/matgroup.hpp"
#include "gen32/permgroup.hpp"

namespace gen32 {

// Monomial 2x2 matrices diag(a, +-1/a), antidiag(a, +-1/a) over GF(q), q odd,
// generated by the swap u, v = diag(1, -1) and w = diag(w, 1/w) for the
// primitive element w. Order 4(q - 1).
MatrixGroup s0_group(std::uint32_t q);
// The matrix w = diag(w, 1/w) above.
MatrixF s0_w(std::uint32_t q);

// x -> x + v on encoded vectors.
Perm translation(const VectorEncoding& enc, const std::vector<Code>& v);
// Translations by the standard basis plus G0 acting on all q^dim vectors.
PermGroup affine_group(const MatrixGroup& g0);
// Extend a permutation of the nonzero points to all points, fixing 0.
Perm add_fixed_zero(const Perm& nonzero);

// Data directory: $GEN32_DATA_DIR, else the bundled data/ directory.
std::string data_dir();
// Bundled zero stabilizers: i in {1..4} and {1, 2}.
MatrixGroup table1_matrix_group(int i);
MatrixGroup table2_matrix_group(int i);
PermGroup table1_group(int i);
PermGroup table2_group(int i);

// <u, v> with u = [[1,1],[0,1]], v = [[0,1],[-1,0]] over GF(p), p > 3 prime.
MatrixGroup sl2(std::uint32_t p);
// <u, u^t> with u^t = [[1,0],[-w,1]].
MatrixGroup sl2_twisted(std::uint32_t p);
bool sl2_twisted_check(std::uint32_t p);

// <a, b | a^m = b^n = 1, a^b = a^r>, on normal forms a^i b^j coded i + m*j.
struct ZGroupSpec {
  std::uint32_t m = 1;
  std::uint32_t n = 1;
  std::uint32_t r = 1;
};
PermGroup z_group(const ZGroupSpec& spec);

// <x -> x + 1, x -> w x> on GF(q), points by field code.
PermGroup agl1(std::uint32_t q);

PermGroup symmetric_group(std::uint32_t n);
PermGroup cyclic_group(std::uint32_t n);  // regular
// Dicyclic group of order 4n, regular: Q8 = dicyclic(2), Q16 = dicyclic(4),
// C3 x| C4 = dicyclic(3).
PermGroup dicyclic_group(std::uint32_t n);
PermGroup klein_four();  // regular C2 x C2
// SL_2(3) = <u, v> on the 8 nonzero vectors of GF(3)^2.
PermGroup sl2_3();

}  // namespace gen32
