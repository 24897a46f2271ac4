#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gen32/perm.hpp"
#include "gen32/permgroup.hpp"

namespace gen32 {

inline constexpr std::size_t kElementCap = 100'000;
inline constexpr std::size_t kSubgroupCensusCap = 2'000;
// Groups up to this order get a full multiplication table.
inline constexpr std::size_t kTableCap = 2'048;

using Index = std::uint32_t;

// Subset of a group's elements, by index.
using ElementSet = std::vector<bool>;

// All elements of a small group, indexed.
//
// Order: breadth-first closure from the generators, each new layer sorted
// lexicographically by image sequence. Index 0 is the identity. Products of
// indices are evaluated through generator words (or a full table for small
// groups), so they never touch the permutation degree.
class ElementTable {
 public:
  // Throws CapExceeded when |G| > cap.
  explicit ElementTable(const PermGroup& g, std::size_t cap = kElementCap);

  std::size_t size() const { return elements_.size(); }
  const Perm& operator[](Index i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<Index> find(const Perm& x) const;
  Index index_of(const Perm& x) const;  // throws PreconditionError when absent

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index x, Index g) const { return mul(mul(inverse_[g], x), g); }
  std::uint64_t element_order(Index a) const { return orders_[a]; }
  Index power(Index a, std::uint64_t e) const;

  // Subgroup generated by `gens`. When `stop_above` is set, the closure stops
  // as soon as it holds more than that many elements (size is then a lower
  // bound and the set incomplete).
  ElementSet closure(const std::vector<Index>& gens, std::size_t* size = nullptr,
                     std::optional<std::size_t> stop_above = std::nullopt) const;
  // True iff <gens> is the whole group (a subgroup of more than half the
  // elements is everything).
  bool generates(const std::vector<Index>& gens) const;

  // Conjugacy classes: class_of(i) and lexicographically least representatives
  // in ascending order.
  const std::vector<Index>& class_representatives() const;
  std::uint32_t class_of(Index i) const;

  const PermGroup& group() const { return group_; }
  PermGroup subgroup(const std::vector<Index>& gens) const;

 private:
  void compute_classes() const;
  void compute_classes_once() const;

  PermGroup group_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Index, PermHash> index_;
  std::vector<std::vector<Index>> right_gen_;  // right_gen_[s][i] = i * gen_s
  std::vector<std::uint32_t> word_start_;      // words_ slice for element i
  std::vector<std::uint8_t> words_;
  std::vector<Index> table_;  // |G|^2 when |G| <= kTableCap
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;

  std::unique_ptr<std::once_flag> classes_once_ = std::make_unique<std::once_flag>();
  mutable std::vector<Index> class_reps_;
  mutable std::vector<std::uint32_t> class_id_;
};

// Elements in table order; throws CapExceeded past 10^5.
std::vector<Perm> elements(const PermGroup& g);
// Lexicographically least member of each class, ascending.
std::vector<Perm> conjugacy_class_reps(const PermGroup& g);

// A Sylow l-subgroup (trivial when l does not divide |G|), by greedy
// closure over normalizing l-elements.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t l);

bool is_cyclic(const ElementTable& t);
bool is_cyclic(const PermGroup& g);
// Nonabelian 2-group of order >= 8 with a unique involution and a cyclic
// subgroup of index 2.
bool is_generalized_quaternion(const PermGroup& g);

// One subgroup per conjugacy class, sorted by order then discovery.
// Throws CapExceeded when |G| > 2000.
std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& g);

}  // namespace gen32
