#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gen32/field.hpp"
#include "gen32/perm.hpp"
#include "gen32/permgroup.hpp"

namespace gen32 {

// A dim x dim matrix over a finite field, entries stored as field codes,
// row-major.
class MatrixF {
 public:
  MatrixF(FieldSpec field, std::uint32_t dim, std::vector<Code> entries);
  static MatrixF identity(const FieldSpec& field, std::uint32_t dim);
  static MatrixF diagonal(const FieldSpec& field, const std::vector<Code>& diag);

  const FieldSpec& field() const { return field_; }
  std::uint32_t dim() const { return dim_; }
  Code operator()(std::uint32_t r, std::uint32_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<Code>& entries() const { return entries_; }

  Code determinant() const;
  bool is_invertible() const { return determinant() != 0; }

  bool operator==(const MatrixF& o) const { return field_ == o.field_ && dim_ == o.dim_ && entries_ == o.entries_; }
  bool operator<(const MatrixF& o) const { return entries_ < o.entries_; }

 private:
  FieldSpec field_;
  std::uint32_t dim_;
  std::vector<Code> entries_;
};

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);
MatrixF mat_inv(const MatrixF& a);  // throws PreconditionError when singular
// Least k >= 1 with a^k = 1; throws CapExceeded after 10^7 steps.
std::uint64_t mat_order(const MatrixF& a);

// A matrix group given by a nonempty list of invertible generators.
class MatrixGroup {
 public:
  MatrixGroup(FieldSpec field, std::uint32_t dim, std::vector<MatrixF> generators);

  const FieldSpec& field() const { return field_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<MatrixF>& generators() const { return generators_; }

 private:
  FieldSpec field_;
  std::uint32_t dim_;
  std::vector<MatrixF> generators_;
};

inline constexpr std::uint64_t kVectorDomainCap = 1'000'000;

// Bijection F_q^dim <-> [0, q^dim): (v_0..v_{dim-1}) -> sum code(v_i) q^i.
class VectorEncoding {
 public:
  VectorEncoding(FieldSpec field, std::uint32_t dim);  // throws CapExceeded past 10^6

  std::uint32_t size() const { return size_; }
  const FieldSpec& field() const { return field_; }
  std::uint32_t dim() const { return dim_; }

  std::uint32_t encode(const std::vector<Code>& v) const;
  std::vector<Code> decode(std::uint32_t point) const;
  // Row vector times matrix.
  std::vector<Code> apply(const std::vector<Code>& v, const MatrixF& m) const;

 private:
  FieldSpec field_;
  std::uint32_t dim_;
  std::uint32_t size_;
};

enum class VectorDomain { All, Nonzero };

// Permutation induced by v -> v*M. On nonzero vectors the zero point is
// dropped and point k stands for vector code k + 1.
Perm perm_from_matrix(const MatrixF& m, VectorDomain domain);
PermGroup to_perm_group(const MatrixGroup& g, VectorDomain domain);
std::uint64_t group_order(const MatrixGroup& g);

// No proper nonzero invariant subspace; decided by spinning every
// one-dimensional subspace.
bool is_irreducible(const MatrixGroup& g);
// Smallest invariant subspace containing v, as an echelon basis.
std::vector<std::vector<Code>> spin(const MatrixGroup& g, const std::vector<Code>& v);

// GF(p^m) matrices rewritten over GF(p) via the regular representation on
// 1, x, ..., x^(m-1). The induced action on encoded vectors is unchanged.
MatrixF restrict_scalars(const MatrixF& m);
MatrixGroup restrict_scalars(const MatrixGroup& g);

// All matrices of a group (|G| <= cap), by closure.
std::vector<MatrixF> matrix_elements(const MatrixGroup& g, std::size_t cap = 100'000);

inline constexpr std::uint64_t kAmbientCap = 100'000;
std::uint64_t gl_order(std::uint32_t dim, std::uint64_t q);

// First g in GL(dim, q) (scanning entry codes in ascending order) with
// g^-1 A g = B. Throws CapExceeded when |GL(dim, q)| > 10^5 and
// PreconditionError when |A| != |B|.
std::optional<MatrixF> conjugate_in_ambient(const MatrixGroup& a, const MatrixGroup& b);

// Text format: "p m dim", then matrices of dim rows of dim codes each,
// separated by blank lines.
MatrixGroup read_matrix_group(std::istream& is);
MatrixGroup read_matrix_group_file(const std::string& path);
void write_matrix_group(std::ostream& os, const MatrixGroup& g);

}  // namespace gen32
