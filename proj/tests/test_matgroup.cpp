#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gen32/constructions.hpp"
#include "gen32/errors.hpp"
#include "gen32/matgroup.hpp"

using namespace gen32;

namespace {

std::vector<MatrixF> all_invertible_2x2(const FieldSpec& f) {
  std::vector<MatrixF> out;
  const auto q = f.order();
  for (Code a = 0; a < q; ++a)
    for (Code b = 0; b < q; ++b)
      for (Code c = 0; c < q; ++c)
        for (Code d = 0; d < q; ++d) {
          MatrixF m(f, 2, {a, b, c, d});
          if (m.is_invertible()) out.push_back(m);
        }
  return out;
}

// Every line <v> tested directly for invariance.
bool irreducible_by_lines(const MatrixGroup& g) {
  const VectorEncoding enc(g.field(), 2);
  for (std::uint32_t pt = 1; pt < enc.size(); ++pt) {
    const auto v = enc.decode(pt);
    bool invariant = true;
    for (const auto& m : g.generators()) {
      const auto w = enc.apply(v, m);
      // w in span(v): cross product zero
      const auto f = g.field();
      invariant &= f.sub(f.mul(v[0], w[1]), f.mul(v[1], w[0])) == 0;
    }
    if (invariant) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("matrix order and inverse") {
  const auto f = field_make(5, 1);
  CHECK(mat_order(MatrixF::identity(f, 2)) == 1);
  const MatrixF d = MatrixF::diagonal(f, {2, 3});
  MatrixF x = d;
  std::uint64_t k = 1;
  while (!(x == MatrixF::identity(f, 2))) {
    x = mat_mul(x, d);
    ++k;
  }
  CHECK(k == 4);
  CHECK(mat_order(d) == 4);
  const MatrixF u(f, 2, {0, 1, 1, 0});
  CHECK(mat_inv(u) == u);
  CHECK_THROWS_AS(mat_inv(MatrixF(f, 2, {1, 2, 2, 4})), PreconditionError);
  CHECK_THROWS_AS(MatrixGroup(f, 2, {MatrixF(f, 2, {1, 2, 2, 4})}), PreconditionError);
  CHECK_THROWS_AS(MatrixGroup(f, 2, {}), PreconditionError);
}

TEST_CASE("vector encoding") {
  const VectorEncoding e3(field_make(3, 1), 2);
  CHECK(e3.encode({0, 0}) == 0);
  CHECK(e3.encode({1, 2}) == 7);
  CHECK(e3.decode(7) == std::vector<Code>{1, 2});
  const auto f5 = field_make(5, 1);
  const VectorEncoding e5(f5, 2);
  const MatrixF u(f5, 2, {0, 1, 1, 0});
  CHECK(e5.apply({0, 1}, u) == std::vector<Code>{1, 0});
  CHECK(perm_from_matrix(u, VectorDomain::All)(5) == 1);
  CHECK_THROWS_AS(VectorEncoding(field_make(2, 1), 21), CapExceeded);
}

TEST_CASE("perm_from_matrix") {
  const auto f5 = field_make(5, 1);
  CHECK(perm_from_matrix(MatrixF::identity(f5, 2), VectorDomain::All).is_identity());
  const auto f3 = field_make(3, 1);
  const Perm t = perm_from_matrix(MatrixF(f3, 1, {2}), VectorDomain::Nonzero);
  CHECK(t == Perm::from_cycles(2, {{0, 1}}));

  const MatrixF u(f5, 2, {0, 1, 1, 0});
  const Perm pu = perm_from_matrix(u, VectorDomain::All);
  CHECK(pu.order() == 2);
  const VectorEncoding enc(f5, 2);
  std::size_t fixed = 0;
  for (std::uint32_t pt = 0; pt < 25; ++pt) {
    const auto v = enc.decode(pt);
    fixed += v[0] == v[1];
  }
  CHECK(fixed == 5);
  CHECK(pu.fixed_points() == fixed);
}

TEST_CASE("right action is a homomorphism") {
  const auto f = field_make(3, 2);
  const MatrixF a(f, 2, {1, 3, 0, 1}), b(f, 2, {0, 1, 2, 5});
  for (auto dom : {VectorDomain::All, VectorDomain::Nonzero})
    CHECK(perm_from_matrix(mat_mul(a, b), dom) == perm_from_matrix(a, dom) * perm_from_matrix(b, dom));
}

TEST_CASE("permutation order matches matrix closure") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 13u}) {
    const MatrixGroup g = s0_group(q);
    CHECK(group_order(g) == matrix_elements(g).size());
    CHECK(group_order(g) == 4 * (q - 1));
  }
  CHECK(group_order(sl2(5)) == matrix_elements(sl2(5)).size());
  for (int i = 1; i <= 3; ++i) CHECK(group_order(table1_matrix_group(i)) == matrix_elements(table1_matrix_group(i)).size());
  CHECK(group_order(table2_matrix_group(1)) == matrix_elements(table2_matrix_group(1)).size());
}

TEST_CASE("irreducibility") {
  const auto f5 = field_make(5, 1);
  std::vector<MatrixF> diag;
  for (Code a = 1; a < 5; ++a)
    for (Code b = 1; b < 5; ++b) diag.push_back(MatrixF::diagonal(f5, {a, b}));
  CHECK_FALSE(is_irreducible(MatrixGroup(f5, 2, diag)));
  CHECK(is_irreducible(s0_group(5)));
  CHECK(is_irreducible(MatrixGroup(f5, 1, {MatrixF(f5, 1, {2})})));
  for (int i = 1; i <= 4; ++i) CHECK(is_irreducible(table1_matrix_group(i)));
  for (int i = 1; i <= 2; ++i) CHECK(is_irreducible(table2_matrix_group(i)));
}

TEST_CASE("irreducibility agrees with scanning every line") {
  for (std::uint32_t p : {3u, 5u}) {
    const auto f = field_make(p, 1);
    const auto mats = all_invertible_2x2(f);
    std::size_t irreducible = 0;
    for (const auto& m : mats) {
      const MatrixGroup g(f, 2, {m});
      CHECK(is_irreducible(g) == irreducible_by_lines(g));
      irreducible += is_irreducible(g);
    }
    CHECK(irreducible > 0);
    // pairs of a few generators
    for (std::size_t i = 0; i < mats.size(); i += 7)
      for (std::size_t j = 0; j < mats.size(); j += 11) {
        const MatrixGroup g(f, 2, {mats[i], mats[j]});
        CHECK(is_irreducible(g) == irreducible_by_lines(g));
      }
  }
}

TEST_CASE("restriction of scalars") {
  const auto f9 = field_make(3, 2);
  const auto r = restrict_scalars(MatrixF::identity(f9, 2));
  CHECK(r.dim() == 4);
  CHECK(r == MatrixF::identity(field_make(3, 1), 4));
  const auto x = restrict_scalars(MatrixF(f9, 1, {3}));
  CHECK(x.entries() == std::vector<Code>{0, 1, 2, 0});

  const MatrixGroup s = s0_group(9);
  const MatrixGroup rs = restrict_scalars(s);
  CHECK(group_order(rs) == 32);
  for (std::size_t k = 0; k < s.generators().size(); ++k)
    CHECK(perm_from_matrix(s.generators()[k], VectorDomain::All) ==
          perm_from_matrix(rs.generators()[k], VectorDomain::All));
  auto a = orbit_sizes(to_perm_group(s, VectorDomain::Nonzero));
  auto b = orbit_sizes(to_perm_group(rs, VectorDomain::Nonzero));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK_THROWS_AS(restrict_scalars(s0_group(5)), PreconditionError);
}

TEST_CASE("conjugacy in the ambient group") {
  const MatrixGroup s5 = s0_group(5);
  const auto self = conjugate_in_ambient(s5, s5);
  REQUIRE(self.has_value());
  const auto g1 = conjugate_in_ambient(table1_matrix_group(1), s5);
  REQUIRE(g1.has_value());
  const PermGroup target = to_perm_group(s5, VectorDomain::Nonzero);
  const MatrixGroup g1m = table1_matrix_group(1);
  for (const auto& a : g1m.generators())
    CHECK(target.contains(perm_from_matrix(mat_mul(mat_mul(mat_inv(*g1), a), *g1), VectorDomain::Nonzero)));
  CHECK_THROWS_AS(conjugate_in_ambient(s5, s0_group(3)), PreconditionError);
  CHECK_THROWS_AS(conjugate_in_ambient(table1_matrix_group(3), restrict_scalars(s0_group(9))), CapExceeded);
  // diagonal group is not conjugate to the monomial group of the same order
  const auto f5 = field_make(5, 1);
  const MatrixGroup d(f5, 2, {MatrixF::diagonal(f5, {2, 1}), MatrixF::diagonal(f5, {1, 2})});
  CHECK_FALSE(conjugate_in_ambient(d, s5).has_value());
}

TEST_CASE("matrix text format") {
  std::stringstream ok("5 1 2\n0 1\n1 0\n\n1 0\n0 4\n");
  const MatrixGroup g = read_matrix_group(ok);
  CHECK(g.generators().size() == 2);
  std::stringstream out;
  write_matrix_group(out, g);
  const MatrixGroup h = read_matrix_group(out);
  CHECK(h.generators() == g.generators());

  for (const char* bad : {"5 1 2\n0 1\n1\n", "5 1 2\n0 1 2\n1 0\n", "4 1 2\n1 0\n0 1\n", "5 1 2\n0 7\n1 0\n",
                          "5 1 2\n0 1\n", "x"}) {
    std::stringstream ss(bad);
    CAPTURE(bad);
    CHECK_THROWS(read_matrix_group(ss));
  }
  CHECK_THROWS_AS(read_matrix_group_file("/nonexistent/file.mat"), FormatError);
}
