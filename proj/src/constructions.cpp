#include "gen32/constructions.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "gen32/arith.hpp"
#include "gen32/errors.hpp"

#ifndef GEN32_DEFAULT_DATA_DIR
#define GEN32_DEFAULT_DATA_DIR "data"
#endif

namespace gen32 {

namespace {

FieldSpec odd_field(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp || pp->first == 2) throw PreconditionError("q must be an odd prime power, got " + std::to_string(q));
  return FieldSpec::make(pp->first, pp->second);
}

}  // namespace

MatrixGroup s0_group(std::uint32_t q) {
  const auto f = odd_field(q);
  const Code minus_one = f.neg(1);
  MatrixF u(f, 2, {0, 1, 1, 0});
  MatrixF v = MatrixF::diagonal(f, {1, minus_one});
  return MatrixGroup(f, 2, {u, v, s0_w(q)});
}

MatrixF s0_w(std::uint32_t q) {
  const auto f = odd_field(q);
  const Code w = f.primitive_element();
  return MatrixF::diagonal(f, {w, f.inv(w)});
}

Perm translation(const VectorEncoding& enc, const std::vector<Code>& v) {
  std::vector<Point> img(enc.size());
  for (std::uint32_t pt = 0; pt < enc.size(); ++pt) {
    auto x = enc.decode(pt);
    for (std::uint32_t i = 0; i < enc.dim(); ++i) x[i] = enc.field().add(x[i], v[i]);
    img[pt] = enc.encode(x);
  }
  return Perm(std::move(img));
}

PermGroup affine_group(const MatrixGroup& g0) {
  const VectorEncoding enc(g0.field(), g0.dim());
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < g0.dim(); ++i) {
    std::vector<Code> e(g0.dim(), 0);
    e[i] = 1;
    gens.push_back(translation(enc, e));
  }
  for (const auto& m : g0.generators()) gens.push_back(perm_from_matrix(m, VectorDomain::All));
  return PermGroup(enc.size(), std::move(gens));
}

Perm add_fixed_zero(const Perm& nonzero) {
  std::vector<Point> img(nonzero.degree() + 1);
  img[0] = 0;
  for (Point x = 0; x < nonzero.degree(); ++x) img[x + 1] = nonzero(x) + 1;
  return Perm(std::move(img));
}

std::string data_dir() {
  if (const char* env = std::getenv("GEN32_DATA_DIR"); env && *env) return env;
  return GEN32_DEFAULT_DATA_DIR;
}

MatrixGroup table1_matrix_group(int i) {
  if (i < 1 || i > 4) throw PreconditionError("table1 index must be 1..4");
  return read_matrix_group_file(data_dir() + "/table1_G" + std::to_string(i) + ".mat");
}

MatrixGroup table2_matrix_group(int i) {
  if (i < 1 || i > 2) throw PreconditionError("table2 index must be 1 or 2");
  return read_matrix_group_file(data_dir() + "/table2_M" + std::to_string(i) + ".mat");
}

PermGroup table1_group(int i) { return affine_group(table1_matrix_group(i)); }
PermGroup table2_group(int i) { return affine_group(table2_matrix_group(i)); }

namespace {

FieldSpec sl2_field(std::uint32_t p) {
  if (!is_prime(p) || p <= 3) throw PreconditionError("sl2: p must be a prime > 3");
  return FieldSpec::make(p, 1);
}

MatrixF unitriangular_upper(const FieldSpec& f) { return MatrixF(f, 2, {1, 1, 0, 1}); }

}  // namespace

MatrixGroup sl2(std::uint32_t p) {
  const auto f = sl2_field(p);
  return MatrixGroup(f, 2, {unitriangular_upper(f), MatrixF(f, 2, {0, 1, f.neg(1), 0})});
}

MatrixGroup sl2_twisted(std::uint32_t p) {
  const auto f = sl2_field(p);
  const Code w = f.primitive_element();
  return MatrixGroup(f, 2, {unitriangular_upper(f), MatrixF(f, 2, {1, 0, f.neg(w), 1})});
}

bool sl2_twisted_check(std::uint32_t p) {
  const std::uint64_t expected = std::uint64_t(p) * (std::uint64_t(p) * p - 1);
  return group_order(sl2_twisted(p)) == expected;
}

PermGroup z_group(const ZGroupSpec& s) {
  const auto m = s.m, n = s.n, r = s.r;
  if (m == 0 || n == 0 || r < 1 || r > m) throw PreconditionError("z_group: need m, n >= 1 and 1 <= r <= m");
  if (std::gcd(r - 1, m) != 1 || std::gcd(m, n) != 1)
    throw PreconditionError("z_group: need gcd(r-1, m) = gcd(m, n) = 1");
  std::vector<std::uint64_t> rpow(n + 1, 1 % m);
  for (std::uint32_t j = 1; j <= n; ++j) rpow[j] = rpow[j - 1] * r % m;
  if (rpow[n] != 1 % m) throw PreconditionError("z_group: need r^n = 1 (mod m)");

  std::vector<Point> a(std::size_t(m) * n), b(std::size_t(m) * n);
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < m; ++i) {
      const Point pt = i + m * j;
      a[pt] = static_cast<Point>((i + rpow[j]) % m + m * j);
      b[pt] = i + m * ((j + 1) % n);
    }
  return PermGroup(std::size_t(m) * n, {Perm(std::move(a)), Perm(std::move(b))});
}

PermGroup agl1(std::uint32_t q) {
  if (q > 10'000) throw PreconditionError("agl1: q must be at most 10^4");
  const auto pp = prime_power(q);
  if (!pp) throw PreconditionError("agl1: q must be a prime power");
  const auto f = FieldSpec::make(pp->first, pp->second);
  const Code w = f.primitive_element();
  std::vector<Point> shift(q), scale(q);
  for (Code x = 0; x < q; ++x) {
    shift[x] = f.add(x, 1);
    scale[x] = f.mul(x, w);
  }
  return PermGroup(q, {Perm(std::move(shift)), Perm(std::move(scale))});
}

PermGroup symmetric_group(std::uint32_t n) {
  if (n == 0) throw PreconditionError("symmetric_group: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> cyc(n);
  for (Point x = 0; x < n; ++x) cyc[x] = (x + 1) % n;
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm(std::move(cyc))});
}

PermGroup cyclic_group(std::uint32_t n) {
  if (n == 0) throw PreconditionError("cyclic_group: n must be positive");
  std::vector<Point> cyc(n);
  for (Point x = 0; x < n; ++x) cyc[x] = (x + 1) % n;
  return PermGroup(n, {Perm(std::move(cyc))});
}

PermGroup dicyclic_group(std::uint32_t n) {
  if (n < 1) throw PreconditionError("dicyclic_group: n must be positive");
  const std::uint32_t m = 2 * n;
  std::vector<Point> a(2 * m), b(2 * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    a[i] = (i + 1) % m;                // a^i * a = a^(i+1)
    a[i + m] = (i + m - 1) % m + m;    // a^i b * a = a^(i-1) b
    b[i] = i + m;                      // a^i * b
    b[i + m] = (i + n) % m;            // a^i b * b = a^(i+n)
  }
  return PermGroup(2 * m, {Perm(std::move(a)), Perm(std::move(b))});
}

PermGroup klein_four() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup sl2_3() {
  const auto f = FieldSpec::make(3, 1);
  const MatrixGroup g(f, 2, {MatrixF(f, 2, {1, 1, 0, 1}), MatrixF(f, 2, {0, 1, 2, 0})});
  return to_perm_group(g, VectorDomain::Nonzero);
}

}  // namespace gen32
