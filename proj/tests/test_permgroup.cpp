#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "gen32/constructions.hpp"
#include "gen32/elements.hpp"
#include "gen32/errors.hpp"
#include "gen32/permgroup.hpp"

using namespace gen32;

namespace {

PermGroup pg(std::size_t n, std::initializer_list<std::initializer_list<std::initializer_list<Point>>> gens) {
  std::vector<Perm> v;
  for (auto g : gens) v.push_back(Perm::from_cycles(n, g));
  return PermGroup(n, v);
}

// Brute-force closure of the generators.
std::set<Perm> naive_elements(const PermGroup& g) {
  std::set<Perm> seen{g.identity()};
  std::vector<Perm> queue{g.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : g.generators()) {
      Perm y = queue[k] * s;
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

std::vector<std::pair<std::string, PermGroup>> corpus() {
  return {
      {"sym4", symmetric_group(4)},
      {"sym5", symmetric_group(5)},
      {"c6", cyclic_group(6)},
      {"q8", dicyclic_group(2)},
      {"q16", dicyclic_group(4)},
      {"dic3", dicyclic_group(3)},
      {"v4", klein_four()},
      {"sl2_3", sl2_3()},
      {"sl2_5", to_perm_group(sl2(5), VectorDomain::Nonzero)},
      {"s0_5", to_perm_group(s0_group(5), VectorDomain::Nonzero)},
      {"s0_7_all", to_perm_group(s0_group(7), VectorDomain::All)},
      {"agl1_9", agl1(9)},
      {"z_11_5_3", z_group({11, 5, 3})},
      {"G1", table1_group(1)},
      {"M1", table2_group(1)},
      {"M2_0", to_perm_group(table2_matrix_group(2), VectorDomain::Nonzero)},
      {"dihedral4", pg(4, {{{0, 1, 2, 3}}, {{1, 3}}})},
  };
}

}  // namespace

TEST_CASE("orbits") {
  CHECK(orbit(pg(3, {{{0, 1, 2}}}), 0) == std::vector<Point>{0, 1, 2});
  const auto os = orbits(pg(4, {{{0, 1}, {2, 3}}}));
  REQUIRE(os.size() == 2);
  CHECK(os[0] == std::vector<Point>{0, 1});
  CHECK(os[1] == std::vector<Point>{2, 3});
  auto sizes = orbit_sizes(to_perm_group(table1_matrix_group(1), VectorDomain::Nonzero));
  CHECK(sizes == std::vector<std::size_t>{8, 8, 8});
}

TEST_CASE("orders from the chain") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(to_perm_group(table1_matrix_group(2), VectorDomain::Nonzero).order() == 32);
  CHECK(to_perm_group(table2_matrix_group(2), VectorDomain::Nonzero).order() == 3840);
}

TEST_CASE("chain order and membership agree with closure") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    if (g.order() > 10'000) continue;
    const auto all = naive_elements(g);
    CHECK(all.size() == g.order());
    const ElementTable t(g);
    CHECK(t.size() == all.size());
    CHECK(t[0].is_identity());
    for (const auto& x : all) CHECK(g.contains(x));
    // a few non-members when the group is not the full symmetric group
    if (g.degree() >= 3) {
      const Perm tr = Perm::from_cycles(g.degree(), {{0, 1}});
      CHECK(g.contains(tr) == (all.count(tr) == 1));
    }
  }
  CHECK_THROWS_AS(symmetric_group(4).contains(Perm(5)), PreconditionError);
}

TEST_CASE("orbit-stabilizer") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    for (Point a : {Point{0}, static_cast<Point>(g.degree() - 1)})
      CHECK(g.order() == orbit(g, a).size() * point_stabilizer(g, a).order());
  }
  CHECK(point_stabilizer(symmetric_group(3), 0).order() == 2);
  CHECK(point_stabilizer(table1_group(1), 0).order() == 16);
  CHECK(point_stabilizer(cyclic_group(5), 2).is_trivial());
}

TEST_CASE("element order and classes") {
  CHECK(elements(cyclic_group(3)).size() == 3);
  CHECK(conjugacy_class_reps(cyclic_group(3)).size() == 3);
  CHECK(conjugacy_class_reps(symmetric_group(3)).size() == 3);

  // brute-force class partition of SL_2(5)
  const PermGroup sl = to_perm_group(sl2(5), VectorDomain::Nonzero);
  const auto elts = elements(sl);
  std::set<Perm> done;
  std::size_t classes = 0;
  for (const auto& x : elts) {
    if (done.count(x)) continue;
    ++classes;
    for (const auto& g : elts) done.insert(x.conjugate(g));
  }
  CHECK(classes == 9);
  const auto reps = conjugacy_class_reps(sl);
  CHECK(reps.size() == 9);
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  // each representative is the least member of its class
  for (const auto& r : reps)
    for (const auto& g : elts) CHECK(!(r.conjugate(g) < r));
}

TEST_CASE("element table order is deterministic") {
  const auto a = elements(symmetric_group(4));
  const auto b = elements(symmetric_group(4));
  CHECK(a == b);
}

TEST_CASE("normality, derived subgroups") {
  CHECK(derived_subgroup(symmetric_group(3)).order() == 3);
  CHECK(derived_subgroup(cyclic_group(6)).is_trivial());
  CHECK(derived_subgroup(klein_four()).is_trivial());
  CHECK(normal_in(table1_group(1), table2_group(1)));
  CHECK(normal_in(to_perm_group(table1_matrix_group(2), VectorDomain::Nonzero),
                  to_perm_group(table2_matrix_group(2), VectorDomain::Nonzero)));
  CHECK_FALSE(normal_in(pg(4, {{{0, 1}}}), symmetric_group(4)));
  CHECK_THROWS_AS(normal_in(symmetric_group(4), klein_four()), PreconditionError);
}

TEST_CASE("quotients") {
  const PermGroup c4 = cyclic_group(4);
  const PermGroup c2(4, {c4.generators()[0].pow(2)});
  CHECK(quotient_action(c4, c2).order() == 2);

  for (std::uint32_t q : {5u, 7u}) {
    const PermGroup g = to_perm_group(s0_group(q), VectorDomain::Nonzero);
    const Perm w = perm_from_matrix(s0_w(q), VectorDomain::Nonzero);
    const PermGroup k(g.degree(), {w * w});
    const auto ca = coset_action(g, k);
    CHECK(ca.image.order() == 8);
    CHECK(is_abelian(ca.image) == (q == 5));
    // elements of K fix every coset
    std::vector<Point> moved;
    for (Point x = 0; x < k.degree(); ++x)
      if (std::any_of(k.generators().begin(), k.generators().end(), [&](const Perm& y) { return y(x) != x; }))
        moved.push_back(x);
    const auto chain = StabChain::build(k.degree(), k.generators(), moved);
    for (const auto& x : elements(k))
      for (const auto& r : ca.representatives) CHECK(least_in_coset(chain, r * x) == r);
    for (const auto& s : ca.image.generators()) CHECK(g.contains(ca.lift(s)));
  }
  CHECK_THROWS_AS(quotient_action(symmetric_group(4), pg(4, {{{0, 1}}})), PreconditionError);
}

TEST_CASE("quotient kernel check by coset labels") {
  const PermGroup g = symmetric_group(4);
  const PermGroup v(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  const auto ca = coset_action(g, v);
  CHECK(ca.image.order() == 6);
  CHECK(ca.representatives[0].is_identity());
  CHECK(std::is_sorted(ca.representatives.begin(), ca.representatives.end()));
  // every representative's coset is distinct and each is least in its coset
  for (const auto& r : ca.representatives)
    for (const auto& n : elements(v)) CHECK(!(n * r < r));
}

TEST_CASE("sylow subgroups") {
  auto s = sylow_subgroup(symmetric_group(4), 3);
  CHECK(s.order() == 3);
  CHECK(is_cyclic(s));
  const PermGroup sl = to_perm_group(sl2(5), VectorDomain::Nonzero);
  auto p2 = sylow_subgroup(sl, 2);
  CHECK(p2.order() == 8);
  CHECK(is_generalized_quaternion(p2));
  CHECK(sylow_subgroup(cyclic_group(6), 5).is_trivial());
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    if (g.order() > 100'000) continue;
    for (auto l : {2u, 3u, 5u}) {
      std::uint64_t part = 1, o = g.order();
      while (o % l == 0) {
        o /= l;
        part *= l;
      }
      CHECK(sylow_subgroup(g, l).order() == part);
    }
  }
}

TEST_CASE("subgroup census") {
  auto orders = [](const std::vector<PermGroup>& subs) {
    std::vector<std::uint64_t> o;
    for (const auto& s : subs) o.push_back(s.order());
    return o;
  };
  CHECK(orders(subgroups_up_to_conjugacy(cyclic_group(6))) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(subgroups_up_to_conjugacy(symmetric_group(3))) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(subgroups_up_to_conjugacy(dicyclic_group(2))) == std::vector<std::uint64_t>{1, 2, 4, 4, 4, 8});
  CHECK(subgroups_up_to_conjugacy(symmetric_group(4)).size() == 11);
  CHECK(subgroups_up_to_conjugacy(symmetric_group(5)).size() == 19);
  CHECK_THROWS_AS(subgroups_up_to_conjugacy(symmetric_group(7)), CapExceeded);
}

TEST_CASE("Q8 census against brute-force subset closure") {
  const PermGroup q8 = dicyclic_group(2);
  const auto elts = elements(q8);
  std::set<std::set<Perm>> subgroups;
  for (unsigned mask = 0; mask < (1u << elts.size()); ++mask) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < elts.size(); ++i)
      if (mask >> i & 1) gens.push_back(elts[i]);
    const auto e = naive_elements(PermGroup(q8.degree(), gens));
    subgroups.insert(e);
  }
  // Q8 subgroups are all normal, so classes = subgroups
  CHECK(subgroups.size() == 6);
  CHECK(subgroups_up_to_conjugacy(q8).size() == subgroups.size());
}

TEST_CASE("text format") {
  const PermGroup g = symmetric_group(5);
  std::stringstream ss;
  write_perm_group(ss, g);
  CHECK(ss.str().rfind("degree 5\n", 0) == 0);
  const PermGroup h = read_perm_group(ss);
  CHECK(h.order() == 120);
  std::stringstream bad("degree 3\n0 1\n");
  CHECK_THROWS_AS(read_perm_group(bad), FormatError);
  std::stringstream nohead("0 1 2\n");
  CHECK_THROWS_AS(read_perm_group(nohead), FormatError);
}
