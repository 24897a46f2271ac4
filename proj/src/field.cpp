#include "gen32/field.hpp"

#include <algorithm>
#include <string>

#include "gen32/arith.hpp"
#include "gen32/errors.hpp"

namespace gen32 {

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2).
  std::uint64_t r = 1, b = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  return trim(std::move(r));
}

}  // namespace

Poly mod(const Poly& a, const Poly& m, std::uint32_t p) {
  Poly r = trim(a);
  const Poly mm = trim(m);
  if (mm.empty()) throw PreconditionError("polynomial division by zero");
  const std::uint64_t lead_inv = inv_mod(mm.back(), p);
  while (r.size() >= mm.size()) {
    const std::size_t shift = r.size() - mm.size();
    const std::uint64_t c = r.back() * lead_inv % p;
    for (std::size_t i = 0; i < mm.size(); ++i) {
      const std::uint64_t t = c * mm[i] % p;
      r[i + shift] = static_cast<std::uint32_t>((r[i + shift] + p - t) % p);
    }
    r = trim(std::move(r));
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return mod(r, m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const Poly g = trim(f);
  if (g.size() < 2) return false;
  const std::size_t m = g.size() - 1;
  if (m == 1) return true;
  // Root search settles degrees 2 and 3 on its own.
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = g.size(); i-- > 0;) v = (v * x + g[i]) % p;
    if (v == 0) return false;
  }
  if (m <= 3) return true;
  // gcd(f, x^(p^k) - x) = 1 for all k <= m/2.
  Poly xk = {0, 1};
  const Poly x = {0, 1};
  for (std::size_t k = 1; k <= m / 2; ++k) {
    Poly base = xk, acc = {1};
    std::uint64_t e = p;
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, base, g, p);
      base = mulmod(base, base, g, p);
      e >>= 1;
    }
    xk = acc;
    if (gcd(g, sub(xk, x, p), p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldSpec FieldSpec::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw PreconditionError("field_make: " + std::to_string(p) + " is not prime");
  if (m == 0) throw PreconditionError("field_make: extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) throw PreconditionError("field_make: p^m exceeds 2^31");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);

  if (m > 1) {
    // Lexicographic on (c_0, ..., c_{m-1}): c_0 is the most significant digit.
    std::vector<std::uint32_t> digits(m, 0);
    bool found = false;
    for (std::uint64_t idx = 0; idx < q && !found; ++idx) {
      std::uint64_t t = idx;
      for (std::uint32_t i = m; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      poly::Poly f(digits.begin(), digits.end());
      f.push_back(1);
      if (poly::is_irreducible(f, p)) {
        impl->modulus = std::move(f);
        found = true;
      }
    }
    if (!found) throw PreconditionError("field_make: no irreducible polynomial found");
  }

  FieldSpec tmp{impl};
  // Primitive element: scan codes from 2 upward.
  if (q == 2) {
    impl->primitive = 1;
  } else {
    const auto primes = prime_divisors(q - 1);
    for (Code c = 2; c < q; ++c) {
      bool ok = true;
      for (auto l : primes)
        if (tmp.pow(c, (q - 1) / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        impl->primitive = c;
        break;
      }
    }
  }

  if (m > 1 && q <= (1u << 16)) {
    impl->exp.resize(q - 1);
    impl->log.assign(q, 0);
    Code x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      impl->exp[i] = x;
      impl->log[x] = i;
      x = tmp.mul_poly(x, impl->primitive);
    }
  }
  return FieldSpec{impl};
}

Code FieldSpec::add(Code a, Code b) const {
  const auto p = impl_->p;
  if (impl_->m == 1) {
    const std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Code>(s >= p ? s - p : s);
  }
  Code r = 0, w = 1;
  for (std::uint32_t i = 0; i < impl_->m; ++i) {
    r += ((a % p + b % p) % p) * w;
    a /= p;
    b /= p;
    w *= p;
  }
  return r;
}

Code FieldSpec::neg(Code a) const {
  const auto p = impl_->p;
  if (impl_->m == 1) return a == 0 ? 0 : p - a;
  Code r = 0, w = 1;
  for (std::uint32_t i = 0; i < impl_->m; ++i) {
    r += ((p - a % p) % p) * w;
    a /= p;
    w *= p;
  }
  return r;
}

Code FieldSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldSpec::mul_poly(Code a, Code b) const {
  const auto p = impl_->p;
  const auto m = impl_->m;
  poly::Poly x(m), y(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  const auto r = poly::mulmod(poly::trim(x), poly::trim(y), impl_->modulus, p);
  Code c = 0;
  for (std::size_t i = r.size(); i-- > 0;) c = c * p + r[i];
  return c;
}

Code FieldSpec::mul(Code a, Code b) const {
  if (impl_->m == 1) return static_cast<Code>(std::uint64_t(a) * b % impl_->p);
  if (a == 0 || b == 0) return 0;
  if (!impl_->log.empty()) {
    const auto s = (std::uint64_t(impl_->log[a]) + impl_->log[b]) % (impl_->q - 1);
    return impl_->exp[s];
  }
  return mul_poly(a, b);
}

Code FieldSpec::pow(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code FieldSpec::inv(Code a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return pow(a, impl_->q - 2);
}

std::uint64_t FieldSpec::multiplicative_order(Code a) const {
  if (a == 0) throw PreconditionError("multiplicative order of zero");
  std::uint64_t ord = impl_->q - 1;
  for (auto l : prime_divisors(ord))
    while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
  return ord;
}

FieldElement FieldSpec::element(Code c) const {
  if (c >= impl_->q) throw PreconditionError("field code out of range");
  FieldElement e{impl_->p, std::vector<std::uint32_t>(impl_->m)};
  for (auto& x : e.coeffs) {
    x = c % impl_->p;
    c /= impl_->p;
  }
  return e;
}

Code FieldSpec::code(const FieldElement& e) const {
  if (e.p != impl_->p || e.coeffs.size() != impl_->m)
    throw PreconditionError("field element belongs to a different field");
  Code c = 0;
  for (std::size_t i = e.coeffs.size(); i-- > 0;) {
    if (e.coeffs[i] >= impl_->p) throw PreconditionError("unreduced field coefficient");
    c = c * impl_->p + e.coeffs[i];
  }
  return c;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  return element(add(code(a), code(b)));
}
FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  return element(mul(code(a), code(b)));
}
FieldElement FieldSpec::neg(const FieldElement& a) const { return element(neg(code(a))); }
FieldElement FieldSpec::inv(const FieldElement& a) const { return element(inv(code(a))); }

}  // namespace gen32
