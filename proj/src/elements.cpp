#include "gen32/elements.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gen32/arith.hpp"
#include "gen32/errors.hpp"

namespace gen32 {

ElementTable::ElementTable(const PermGroup& g, std::size_t cap) : group_(g) {
  const auto order = g.order();
  if (order > cap)
    throw CapExceeded("element enumeration: |G| = " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
  const auto& gens = g.generators();
  if (gens.size() > 255) throw PreconditionError("element enumeration: too many generators");

  const std::size_t n = static_cast<std::size_t>(order);
  elements_.reserve(n);
  right_gen_.assign(gens.size(), std::vector<Index>(n, 0));
  std::vector<Index> parent{0};
  std::vector<std::uint8_t> via{0};

  elements_.emplace_back(g.degree());
  index_.emplace(elements_.front(), 0);
  word_start_.push_back(0);

  struct Edge {
    Index from;
    std::uint8_t gen;
    Index to;  // pending id
  };

  std::size_t layer_begin = 0;
  while (layer_begin < elements_.size()) {
    const std::size_t layer_end = elements_.size();
    std::vector<Perm> pending;
    std::vector<std::pair<Index, std::uint8_t>> pending_origin;
    std::unordered_map<Perm, Index, PermHash> pending_index;
    std::vector<Edge> edges;
    for (std::size_t x = layer_begin; x < layer_end; ++x) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Perm y = elements_[x] * gens[s];
        const auto gs = static_cast<std::uint8_t>(s);
        if (auto it = index_.find(y); it != index_.end()) {
          right_gen_[s][x] = it->second;
          continue;
        }
        auto [it, fresh] = pending_index.emplace(y, static_cast<Index>(pending.size()));
        if (fresh) {
          pending.push_back(std::move(y));
          pending_origin.emplace_back(static_cast<Index>(x), gs);
        }
        edges.push_back({static_cast<Index>(x), gs, it->second});
      }
    }
    std::vector<Index> perm(pending.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return pending[a] < pending[b]; });
    std::vector<Index> final_index(pending.size());
    for (auto k : perm) {
      const auto id = static_cast<Index>(elements_.size());
      final_index[k] = id;
      index_.emplace(pending[k], id);
      elements_.push_back(std::move(pending[k]));
      parent.push_back(pending_origin[k].first);
      via.push_back(pending_origin[k].second);
    }
    for (const auto& e : edges) right_gen_[e.gen][e.from] = final_index[e.to];
    layer_begin = layer_end;
  }
  if (elements_.size() != n) throw std::logic_error("element closure disagrees with chain order");

  // Words, in index order (parents precede children).
  word_start_.assign(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = parent[i];
    word_start_[i + 1] = word_start_[i] + (word_start_[p + 1] - word_start_[p]) + 1;
  }
  words_.resize(word_start_[n]);
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = parent[i];
    std::copy(words_.begin() + word_start_[p], words_.begin() + word_start_[p + 1],
              words_.begin() + word_start_[i]);
    words_[word_start_[i + 1] - 1] = via[i];
  }

  if (n <= kTableCap) {
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      table_[a * n] = static_cast<Index>(a);
      for (std::size_t b = 1; b < n; ++b)
        table_[a * n + b] = right_gen_[via[b]][table_[a * n + parent[b]]];
    }
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse_[i] = index_.at(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }
}

std::optional<Index> ElementTable::find(const Perm& x) const {
  if (auto it = index_.find(x); it != index_.end()) return it->second;
  return std::nullopt;
}

Index ElementTable::index_of(const Perm& x) const {
  auto i = find(x);
  if (!i) throw PreconditionError("element does not belong to the group");
  return *i;
}

Index ElementTable::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[std::size_t(a) * elements_.size() + b];
  for (auto k = word_start_[b]; k < word_start_[b + 1]; ++k) a = right_gen_[words_[k]][a];
  return a;
}

Index ElementTable::power(Index a, std::uint64_t e) const {
  Index r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ElementSet ElementTable::closure(const std::vector<Index>& gens, std::size_t* size,
                                 std::optional<std::size_t> stop_above) const {
  ElementSet seen(elements_.size(), false);
  std::vector<Index> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    if (stop_above && queue.size() > *stop_above) break;
    for (auto t : gens) {
      const Index y = mul(queue[k], t);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (size) *size = queue.size();
  return seen;
}

bool ElementTable::generates(const std::vector<Index>& gens) const {
  const std::size_t half = elements_.size() / 2;
  std::size_t got = 0;
  closure(gens, &got, half);
  return got > half || got == elements_.size();
}

void ElementTable::compute_classes() const {
  std::call_once(*classes_once_, [this] { compute_classes_once(); });
}

void ElementTable::compute_classes_once() const {
  const std::size_t n = elements_.size();
  std::vector<Index> gen_index;
  for (std::size_t s = 0; s < right_gen_.size(); ++s) gen_index.push_back(right_gen_[s][0]);

  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw(n, kNone);
  std::vector<Index> raw_rep;
  for (Index i = 0; i < n; ++i) {
    if (raw[i] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(raw_rep.size());
    std::vector<Index> cls{i};
    raw[i] = id;
    Index best = i;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (auto s : gen_index) {
        const Index y = conj(cls[k], s);
        if (raw[y] == kNone) {
          raw[y] = id;
          cls.push_back(y);
          if (elements_[y] < elements_[best]) best = y;
        }
      }
    raw_rep.push_back(best);
  }
  std::vector<std::uint32_t> order(raw_rep.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return elements_[raw_rep[a]] < elements_[raw_rep[b]]; });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  class_reps_.clear();
  for (auto k : order) class_reps_.push_back(raw_rep[k]);
  class_id_.resize(n);
  for (std::size_t i = 0; i < n; ++i) class_id_[i] = rank[raw[i]];
}

const std::vector<Index>& ElementTable::class_representatives() const {
  compute_classes();
  return class_reps_;
}

std::uint32_t ElementTable::class_of(Index i) const {
  compute_classes();
  return class_id_[i];
}

PermGroup ElementTable::subgroup(const std::vector<Index>& gens) const {
  std::vector<Perm> perms;
  for (auto i : gens) perms.push_back(elements_[i]);
  return PermGroup(group_.degree(), std::move(perms));
}

std::vector<Perm> elements(const PermGroup& g) { return ElementTable(g).elements(); }

std::vector<Perm> conjugacy_class_reps(const PermGroup& g) {
  ElementTable t(g);
  std::vector<Perm> out;
  for (auto i : t.class_representatives()) out.push_back(t[i]);
  return out;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t l) {
  if (n < 1) return false;
  while (n % l == 0) n /= l;
  return n == 1;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t l) {
  if (!is_prime(l)) throw PreconditionError("sylow_subgroup: l must be prime");
  const auto order = g.order();
  if (order % l != 0) return PermGroup::trivial(g.degree());
  ElementTable t(g);
  const std::uint64_t target = ipow(l, valuation(order, l));

  Index start = 0;
  for (Index i = 1; i < t.size(); ++i)
    if (is_power_of(t.element_order(i), l) && t.element_order(i) > t.element_order(start)) start = i;
  std::vector<Index> gens{start};
  std::size_t size = 0;
  ElementSet p = t.closure(gens, &size);
  while (size < target) {
    bool grew = false;
    for (Index y = 1; y < t.size() && !grew; ++y) {
      if (p[y] || !is_power_of(t.element_order(y), l)) continue;
      const bool normalizes =
          std::all_of(gens.begin(), gens.end(), [&](Index x) { return p[t.conj(x, y)]; });
      if (!normalizes) continue;
      gens.push_back(y);
      p = t.closure(gens, &size);
      grew = true;
    }
    // A proper l-subgroup always has l-elements of its normalizer outside it.
    if (!grew) throw std::logic_error("sylow_subgroup: greedy closure stalled");
  }
  return t.subgroup(gens);
}

bool is_cyclic(const ElementTable& t) {
  for (Index i = 0; i < t.size(); ++i)
    if (t.element_order(i) == t.size()) return true;
  return false;
}

bool is_cyclic(const PermGroup& g) {
  if (is_abelian(g) && g.generators().size() <= 1) return true;
  return is_cyclic(ElementTable(g));
}

bool is_generalized_quaternion(const PermGroup& g) {
  const auto order = g.order();
  if (order < 8 || !is_power_of(order, 2) || is_abelian(g)) return false;
  ElementTable t(g);
  std::size_t involutions = 0;
  bool index2_cyclic = false;
  for (Index i = 0; i < t.size(); ++i) {
    involutions += t.element_order(i) == 2;
    index2_cyclic |= t.element_order(i) == order / 2;
  }
  return involutions == 1 && index2_cyclic;
}

std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& g) {
  const ElementTable t(g, kSubgroupCensusCap);
  const std::size_t n = t.size();

  struct Found {
    ElementSet set;
    std::size_t order;
    std::vector<Index> gens;
  };
  std::vector<Found> reps;
  std::unordered_set<ElementSet> seen;

  auto record = [&](ElementSet set, std::size_t order, std::vector<Index> gens) {
    if (seen.count(set)) return;
    std::vector<Index> members;
    for (Index i = 0; i < n; ++i)
      if (set[i]) members.push_back(i);
    for (Index x = 0; x < n; ++x) {
      ElementSet c(n, false);
      for (auto h : members) c[t.conj(h, x)] = true;
      seen.insert(std::move(c));
    }
    reps.push_back({std::move(set), order, std::move(gens)});
  };

  {
    ElementSet triv(n, false);
    triv[0] = true;
    record(std::move(triv), 1, {});
  }
  for (Index i = 1; i < n; ++i) {
    std::size_t sz = 0;
    auto s = t.closure({i}, &sz);
    record(std::move(s), sz, {i});
  }
  // Extend every class representative by one element from each right coset.
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<Index> members;
    for (Index i = 0; i < n; ++i)
      if (reps[k].set[i]) members.push_back(i);
    ElementSet covered = reps[k].set;
    for (Index x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (auto h : members) covered[t.mul(h, x)] = true;
      auto gens = reps[k].gens;
      gens.push_back(x);
      std::size_t sz = 0;
      auto s = t.closure(gens, &sz);
      record(std::move(s), sz, std::move(gens));
    }
  }

  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return reps[a].order < reps[b].order; });
  std::vector<PermGroup> out;
  for (auto k : order) out.push_back(t.subgroup(reps[k].gens));
  return out;
}

}  // namespace gen32
