#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "gen32/constructions.hpp"
#include "gen32/elements.hpp"
#include "gen32/errors.hpp"
#include "gen32/gens.hpp"
#include "gen32/transitivity.hpp"

using namespace gen32;

namespace {

std::vector<std::pair<std::string, PermGroup>> small_corpus() {
  return {
      {"trivial", PermGroup::trivial(3)},
      {"c2", cyclic_group(2)},
      {"c6", cyclic_group(6)},
      {"v4", klein_four()},
      {"sym3", symmetric_group(3)},
      {"sym4", symmetric_group(4)},
      {"q8", dicyclic_group(2)},
      {"q16", dicyclic_group(4)},
      {"dic3", dicyclic_group(3)},
      {"sl2_3", sl2_3()},
      {"s0_3", to_perm_group(s0_group(3), VectorDomain::Nonzero)},
      {"s0_5", to_perm_group(s0_group(5), VectorDomain::Nonzero)},
      {"s0_7", to_perm_group(s0_group(7), VectorDomain::Nonzero)},
      {"agl1_4", agl1(4)},
      {"agl1_5", agl1(5)},
      {"z_5_4_2", z_group({5, 4, 2})},
      {"z_7_3_2", z_group({7, 3, 2})},
      {"c2xc2xc2", PermGroup(6, {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{2, 3}}),
                                 Perm::from_cycles(6, {{4, 5}})})},
      {"G2_0", to_perm_group(table1_matrix_group(2), VectorDomain::Nonzero)},
  };
}

// Smallest k <= 3 such that some k-subset generates, testing every subset.
std::uint32_t naive_d(const PermGroup& g) {
  if (g.order() == 1) return 0;
  const auto elts = elements(g);
  const std::size_t n = elts.size();
  auto gen = [&](std::vector<Perm> s) { return PermGroup(g.degree(), std::move(s)).order() == g.order(); };
  for (std::size_t a = 0; a < n; ++a)
    if (gen({elts[a]})) return 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (gen({elts[a], elts[b]})) return 2;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (gen({elts[a], elts[b], elts[c]})) return 3;
  return 4;  // means "more than 3"
}

}  // namespace

TEST_CASE("generates") {
  const PermGroup s4 = symmetric_group(4);
  CHECK(generates(s4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})}));
  CHECK_FALSE(generates(s4, {Perm::from_cycles(4, {{0, 1}})}));
  const PermGroup s0 = to_perm_group(s0_group(5), VectorDomain::Nonzero);
  CHECK(generates(s0, s0.generators()));
  CHECK_THROWS_AS(generates(klein_four(), {Perm::from_cycles(4, {{0, 1}})}), PreconditionError);
}

TEST_CASE("d_exact examples") {
  CHECK(d_exact(klein_four()).value == 2);
  CHECK(d_exact(to_perm_group(s0_group(5), VectorDomain::Nonzero)).value == 3);
  CHECK(d_exact(to_perm_group(s0_group(7), VectorDomain::Nonzero)).value == 2);
  CHECK(d_exact(to_perm_group(table1_matrix_group(2), VectorDomain::Nonzero)).value == 4);
  CHECK(d_exact(cyclic_group(7)).value == 1);
  const auto t = d_exact(PermGroup::trivial(2));
  CHECK(t.value == 0);
  CHECK(t.witness.elements.empty());
}

TEST_CASE("d_exact witnesses are verified and deterministic") {
  for (const auto& [name, g] : small_corpus()) {
    CAPTURE(name);
    const auto a = d_exact(g);
    const auto b = d_exact(g);
    CHECK(a.witness.verified);
    CHECK(a.witness.elements.size() == a.value);
    CHECK(a.witness.elements == b.witness.elements);
    CHECK(a.method == DMethod::Exhaustive);
    if (a.value > 0) CHECK(generates(g, a.witness.elements));
  }
}

TEST_CASE("d_exact agrees with the naive subset oracle up to order 24") {
  std::size_t checked = 0;
  for (const auto& [name, g] : small_corpus()) {
    if (g.order() > 24) continue;
    CAPTURE(name);
    CHECK(d_exact(g).value == naive_d(g));
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("conjugacy reduction is sound up to order 200") {
  DSearchOptions unreduced;
  unreduced.conjugacy_reduction = false;
  for (const auto& [name, g] : small_corpus()) {
    if (g.order() > 200) continue;
    CAPTURE(name);
    CHECK(d_exact(g).value == d_exact(g, unreduced).value);
  }
}

TEST_CASE("abelian lower bound") {
  CHECK(d_lower_bound_abelian(dicyclic_group(2)) == 2);
  CHECK(d_lower_bound_abelian(to_perm_group(s0_group(5), VectorDomain::Nonzero)) == 3);
  CHECK(d_lower_bound_abelian(symmetric_group(3)) == 1);
  CHECK(d_lower_bound_abelian(to_perm_group(sl2(5), VectorDomain::Nonzero)) == 0);
  for (const auto& [name, g] : small_corpus()) {
    CAPTURE(name);
    CHECK(d_lower_bound_abelian(g) <= d_exact(g).value);
  }
  CHECK_THROWS_AS(d_lower_bound_abelian(symmetric_group(9)), CapExceeded);
}

TEST_CASE("budget fallback") {
  DSearchOptions tight;
  // S0(5): level 2 projects past the budget, the abelian bound 3 meets the
  // first level-3 success
  const PermGroup s0 = to_perm_group(s0_group(5), VectorDomain::Nonzero);
  const std::size_t classes = conjugacy_class_reps(s0).size();
  tight.budget = (classes - 1) * s0.order() - 1;
  const auto r = d_exact(s0, tight);
  CHECK(r.value == 3);
  CHECK(r.method == DMethod::BoundMeet);
  CHECK(r.witness.verified);
  // Sym(4): level 1 refuted exhaustively, level 2 settled by bound meet
  tight.budget = 4 * 24 - 1;  // four non-identity classes
  const auto s = d_exact(symmetric_group(4), tight);
  CHECK(s.value == 2);
  CHECK(s.method == DMethod::BoundMeet);
  // perfect group with a tiny budget cannot be settled
  tight.budget = 2;
  const PermGroup a5 = derived_subgroup(symmetric_group(5));
  try {
    d_exact(a5, tight);
    FAIL("expected Indeterminate");
  } catch (const Indeterminate& e) {
    CHECK(e.lower() == 1);
    CHECK(e.upper() == 0);
  }
}

TEST_CASE("affine shortcut") {
  const auto s = d_affine(s0_group(5));
  CHECK(s.value == 3);
  CHECK(s.method == DMethod::ShortcutLM);
  CHECK(s.witness.verified);
  CHECK(s.witness.elements.size() == 3);
  CHECK(generates(affine_group(s0_group(5)), s.witness.elements));

  CHECK(d_affine(table1_matrix_group(2)).value == 4);

  const auto f5 = field_make(5, 1);
  const MatrixGroup gl1(f5, 1, {MatrixF(f5, 1, {2})});
  const auto c = d_affine(gl1);
  CHECK(c.value == 2);
  CHECK(c.witness.elements.size() == 2);
  CHECK(generates(affine_group(gl1), c.witness.elements));

  std::vector<MatrixF> diag;
  for (Code a = 1; a < 5; ++a) diag.push_back(MatrixF::diagonal(f5, {a, 1}));
  CHECK_THROWS_AS(d_affine(MatrixGroup(f5, 2, diag)), PreconditionError);
  CHECK_THROWS_AS(d_affine(MatrixGroup(f5, 2, {MatrixF::identity(f5, 2)})), PreconditionError);
}

TEST_CASE("affine shortcut matches d_exact on small affine groups") {
  const auto f = field_make(3, 1);
  const MatrixGroup gl1_3(f, 1, {MatrixF(f, 1, {2})});
  CHECK(d_affine(gl1_3).value == d_exact(affine_group(gl1_3)).value);
  CHECK(d_affine(s0_group(3)).value == d_exact(affine_group(s0_group(3))).value);
  CHECK(d_affine(s0_group(5)).value == d_exact(affine_group(s0_group(5))).value);
}

TEST_CASE("all abelian subgroups cyclic") {
  CHECK(all_abelian_subgroups_cyclic(to_perm_group(sl2(5), VectorDomain::Nonzero)));
  CHECK_FALSE(all_abelian_subgroups_cyclic(symmetric_group(4)));
  CHECK_FALSE(all_abelian_subgroups_cyclic(klein_four()));
  CHECK(all_abelian_subgroups_cyclic(dicyclic_group(2)));
  CHECK(all_abelian_subgroups_cyclic(cyclic_group(12)));
  for (auto spec : {ZGroupSpec{5, 4, 2}, ZGroupSpec{7, 3, 2}, ZGroupSpec{5, 4, 3}, ZGroupSpec{11, 5, 3},
                    ZGroupSpec{9, 2, 8}, ZGroupSpec{13, 4, 5}}) {
    const PermGroup z = z_group(spec);
    CHECK(all_abelian_subgroups_cyclic(z));
    CHECK(d_exact(z).value <= 2);
  }
}

TEST_CASE("predicate matches a brute-force abelian subgroup scan") {
  for (const auto& [name, g] : small_corpus()) {
    if (g.order() > 64) continue;
    CAPTURE(name);
    // every abelian subgroup cyclic iff every pair of commuting elements
    // generates a cyclic group
    const auto elts = elements(g);
    bool expected = true;
    for (const auto& a : elts)
      for (const auto& b : elts)
        if (a * b == b * a && !is_cyclic(PermGroup(g.degree(), {a, b}))) expected = false;
    CHECK(all_abelian_subgroups_cyclic(g) == expected);
  }
}

TEST_CASE("method names") {
  CHECK(to_string(DMethod::Exhaustive) == "exhaustive");
  CHECK(to_string(DMethod::ShortcutLM) == "shortcut-LM");
  CHECK(to_string(DMethod::BoundMeet) == "bound-meet");
}

TEST_CASE("primitive Frobenius groups have d = max(2, d(H))") {
  const auto f5 = FieldSpec::make(5, 1);
  const MatrixGroup q8(f5, 2, {MatrixF(f5, 2, {0, 1, 4, 0}), MatrixF::diagonal(f5, {2, 3})});
  const auto f7 = FieldSpec::make(7, 1);
  const MatrixGroup c3(f7, 1, {MatrixF(f7, 1, {2})});
  const auto f11 = FieldSpec::make(11, 1);
  const MatrixGroup c5(f11, 1, {MatrixF(f11, 1, {3})});
  std::vector<std::pair<std::string, PermGroup>> cases = {
      {"agl1_5", agl1(5)}, {"agl1_8", agl1(8)}, {"agl1_9", agl1(9)},
      {"7:3", affine_group(c3)}, {"11:5", affine_group(c5)}, {"25:Q8", affine_group(q8)}};
  int seen = 0;
  for (const auto& [name, g] : cases) {
    CAPTURE(name);
    REQUIRE(is_primitive(g));
    REQUIRE(is_frobenius(g));
    const auto h = point_stabilizer(g, 0);
    CHECK(d_exact(g).value == std::max<std::uint32_t>(2, d_exact(h).value));
    ++seen;
  }
  CHECK(seen == 6);
}
