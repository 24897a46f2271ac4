#include "gen32/transitivity.hpp"

#include <algorithm>
#include <numeric>

#include "gen32/elements.hpp"
#include "gen32/errors.hpp"

namespace gen32 {

bool is_half_transitive(const PermGroup& g) {
  if (g.degree() == 1) return true;
  const auto sizes = orbit_sizes(g);
  if (sizes.empty()) return false;
  return sizes.front() > 1 && std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == sizes.front(); });
}

bool is_three_halves(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  const auto stab = point_stabilizer(g, 0);
  if (stab.is_trivial()) return false;
  std::size_t common = 0;
  for (const auto& o : orbits(stab)) {
    if (o.front() == 0) continue;  // {0}
    if (common == 0) common = o.size();
    if (o.size() != common) return false;
  }
  return true;
}

std::uint32_t rank(const PermGroup& g) {
  if (!is_transitive(g)) throw PreconditionError("rank: group is not transitive");
  return static_cast<std::uint32_t>(orbits(point_stabilizer(g, 0)).size());
}

bool is_two_transitive(const PermGroup& g) { return is_transitive(g) && rank(g) == 2; }

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when already joined.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<Point> parent;
};

}  // namespace

std::vector<Point> minimal_block(const PermGroup& g, Point beta) {
  if (beta >= g.degree()) throw PreconditionError("minimal_block: point out of range");
  UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> queue;
  if (uf.unite(0, beta)) queue.emplace_back(0, beta);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto [a, b] = queue[k];
    for (const auto& s : g.generators()) {
      const Point x = uf.find(s(a)), y = uf.find(s(b));
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  std::vector<Point> block;
  const Point root = uf.find(0);
  for (Point x = 0; x < g.degree(); ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

bool is_primitive(const PermGroup& g) {
  if (g.degree() < 2) throw PreconditionError("is_primitive: degree must be at least 2");
  if (!is_transitive(g)) throw PreconditionError("is_primitive: group is not transitive");
  for (Point beta = 1; beta < g.degree(); ++beta)
    if (minimal_block(g, beta).size() != g.degree()) return false;
  return true;
}

bool is_semiregular(const PermGroup& g) {
  const auto order = g.order();
  const auto sizes = orbit_sizes(g);
  return std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == order; });
}

bool is_regular(const PermGroup& g) { return is_transitive(g) && is_semiregular(g); }

bool is_frobenius(const PermGroup& g) {
  if (!is_transitive(g) || is_regular(g)) return false;
  ElementTable t(g);
  for (Index i = 1; i < t.size(); ++i)
    if (t[i].fixed_points() >= 2) return false;
  return true;
}

TransitivityReport transitivity_report(const PermGroup& g) {
  TransitivityReport r;
  r.orbit_sizes = orbit_sizes(g);
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
  r.transitive = is_transitive(g);
  r.half_transitive = is_half_transitive(g);
  r.semiregular = is_semiregular(g);
  r.regular = r.transitive && r.semiregular;
  if (r.transitive) {
    r.rank = rank(g);
    r.two_transitive = *r.rank == 2;
    r.three_halves = is_three_halves(g);
    if (g.degree() >= 2) r.primitive = is_primitive(g);
  }
  try {
    r.frobenius = is_frobenius(g);
  } catch (const CapExceeded&) {
    r.frobenius = std::nullopt;
  }
  return r;
}

}  // namespace gen32
