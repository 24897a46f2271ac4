#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gen32/perm.hpp"

namespace gen32 {

inline constexpr std::size_t kDegreeCap = 1'000'000;

// One level of a base and strong generating set.
struct StabLevel {
  Point base = 0;
  // Strong generators fixing every earlier base point.
  std::vector<Perm> generators;
  // Orbit of `base` in discovery order; transversal[k] maps base to orbit[k].
  std::vector<Point> orbit;
  std::vector<Perm> transversal;
  std::vector<Perm> transversal_inv;
  // Point -> index into orbit, or -1.
  std::vector<std::int32_t> slot;

  bool in_orbit(Point x) const { return slot[x] >= 0; }
};

// Deterministic Schreier-Sims stabilizer chain.
class StabChain {
 public:
  // Base points not in `base_prefix` are the smallest point moved by the
  // element that forced the new level.
  static StabChain build(std::size_t degree, const std::vector<Perm>& generators,
                         const std::vector<Point>& base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<StabLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;

  // Product of the orbit lengths; throws CapExceeded past 2^64.
  std::uint64_t order() const;

  // Sift g from `from`; returns the residue and the level where it dropped
  // out (levels().size() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;
  bool contains(const Perm& g) const;

 private:
  void add_generator(std::size_t level, const Perm& g);
  void extend_orbit(std::size_t level);

  std::size_t degree_ = 0;
  std::vector<StabLevel> levels_;
};

// A permutation group given by generators. The stabilizer chain is built on
// first use (thread-safe) and shared between copies.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const StabChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Perm& g) const;  // throws PreconditionError on degree mismatch
  bool is_trivial() const { return order() == 1; }

  Perm identity() const { return Perm(degree_); }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<StabChain> chain;
  };

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

// Orbit of `alpha`, sorted ascending.
std::vector<Point> orbit(const PermGroup& g, Point alpha);
// All orbits, each sorted, ordered by minimal point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
std::vector<std::size_t> orbit_sizes(const PermGroup& g);
bool is_transitive(const PermGroup& g);

// Full stabilizer of alpha, from a chain whose base starts at alpha.
PermGroup point_stabilizer(const PermGroup& g, Point alpha);

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool is_abelian(const PermGroup& g);
// Throws PreconditionError when h is not contained in g.
bool normal_in(const PermGroup& h, const PermGroup& g);
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& s);
PermGroup derived_subgroup(const PermGroup& g);
// <g, extra>
PermGroup join(const PermGroup& g, const std::vector<Perm>& extra);

inline constexpr std::size_t kQuotientIndexCap = 10'000;

// Right-coset action of G on G/N. Coset i is labelled by representatives[i],
// the lexicographically least element of that coset; labels are sorted, so
// coset 0 is N itself.
struct CosetAction {
  PermGroup image;
  std::vector<Perm> representatives;

  // Some element of G mapping to `q` (q is an element of `image`).
  const Perm& lift(const Perm& q) const { return representatives[q(0)]; }
};

// Throws PreconditionError if N is not normal in G, CapExceeded past the
// index cap.
CosetAction coset_action(const PermGroup& g, const PermGroup& n);
inline PermGroup quotient_action(const PermGroup& g, const PermGroup& n) {
  return coset_action(g, n).image;
}

// Lexicographically least element of the right coset N*x.
Perm least_in_coset(const StabChain& n_chain_sorted_base, const Perm& x);

// "degree n" header, then one image sequence per line.
void write_perm_group(std::ostream& os, const PermGroup& g);
PermGroup read_perm_group(std::istream& is);

}  // namespace gen32
