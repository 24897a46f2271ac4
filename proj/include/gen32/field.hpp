#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace gen32 {

// Elements of GF(p^m) are addressed by their integer code
//   code = sum_i coeffs[i] * p^i   (coeffs low degree first).
using Code = std::uint32_t;

// An element in coefficient form. `p` tags the owning field so that
// operands from different fields are rejected.
struct FieldElement {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;

  bool operator==(const FieldElement&) const = default;
};

// GF(p^m) with a fixed defining polynomial: the lexicographically smallest
// monic irreducible of degree m (coefficients compared low degree first).
// Immutable; copies share state.
class FieldSpec {
 public:
  // Throws PreconditionError for nonprime p, m == 0 or p^m > 2^31.
  static FieldSpec make(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->m; }
  std::uint32_t order() const { return impl_->q; }
  // Monic modulus, m + 1 coefficients low degree first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  // Code-level arithmetic. Codes must lie in [0, q).
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws PreconditionError on 0
  Code pow(Code a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(Code a) const;  // a != 0

  // First code >= 2 (code 1 for GF(2)) of multiplicative order q - 1.
  Code primitive_element() const { return impl_->primitive; }

  FieldElement element(Code c) const;
  Code code(const FieldElement& e) const;  // throws on foreign or malformed input

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;

  bool operator==(const FieldSpec& o) const {
    return characteristic() == o.characteristic() && degree() == o.degree();
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    // Multiplication tables for small fields; empty otherwise.
    std::vector<Code> log;
    std::vector<Code> exp;
    Code primitive = 1;
  };

  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Code mul_poly(Code a, Code b) const;

  std::shared_ptr<const Impl> impl_;
};

// Free-function spellings of the field operations.
inline FieldSpec field_make(std::uint32_t p, std::uint32_t m) { return FieldSpec::make(p, m); }
inline Code primitive_element(const FieldSpec& f) { return f.primitive_element(); }

namespace poly {

// Dense polynomials over GF(p), low degree first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a);
Poly mod(const Poly& a, const Poly& m, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
// Rabin test: f monic of degree >= 1 is irreducible over GF(p).
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace poly

}  // namespace gen32
