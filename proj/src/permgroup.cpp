#include "gen32/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "gen32/errors.hpp"

namespace gen32 {

// ---------------------------------------------------------------------------
// StabChain

namespace {

StabLevel make_level(std::size_t degree, Point base) {
  StabLevel lv;
  lv.base = base;
  lv.slot.assign(degree, -1);
  lv.slot[base] = 0;
  lv.orbit.push_back(base);
  lv.transversal.emplace_back(degree);
  lv.transversal_inv.emplace_back(degree);
  return lv;
}

bool fixes_all(const Perm& g, const std::vector<StabLevel>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g(levels[l].base) != levels[l].base) return false;
  return true;
}

}  // namespace

void StabChain::extend_orbit(std::size_t level) {
  auto& lv = levels_[level];
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const auto& s : lv.generators) {
      const Point y = s(lv.orbit[k]);
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[k] * s);
      lv.transversal_inv.push_back(lv.transversal.back().inverse());
    }
  }
}

void StabChain::add_generator(std::size_t level, const Perm& g) {
  levels_[level].generators.push_back(g);
  extend_orbit(level);
}

std::pair<Perm, std::size_t> StabChain::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& lv = levels_[l];
    const Point beta = g(lv.base);
    const auto k = lv.slot[beta];
    if (k < 0) return {std::move(g), l};
    if (k > 0) g = g * lv.transversal_inv[k];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, level] = strip(g);
  return level == levels_.size() && res.is_identity();
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

std::uint64_t StabChain::order() const {
  std::uint64_t ord = 1;
  for (const auto& lv : levels_)
    if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(lv.orbit.size()), &ord))
      throw CapExceeded("group order exceeds 2^64");
  return ord;
}

StabChain StabChain::build(std::size_t degree, const std::vector<Perm>& generators,
                           const std::vector<Point>& base_prefix) {
  StabChain c;
  c.degree_ = degree;

  std::vector<Perm> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (!g.is_identity()) strong.push_back(g);
  }
  for (auto b : base_prefix) {
    if (b >= degree) throw PreconditionError("base point out of range");
    c.levels_.push_back(make_level(degree, b));
  }
  for (const auto& g : strong)
    if (fixes_all(g, c.levels_, c.levels_.size())) c.levels_.push_back(make_level(degree, g.first_moved()));
  for (std::size_t l = 0; l < c.levels_.size(); ++l) {
    for (const auto& g : strong)
      if (fixes_all(g, c.levels_, l)) c.levels_[l].generators.push_back(g);
    c.extend_orbit(l);
  }

  // done[l][k]: Schreier generators (orbit[k], gens[s]) with s < done[l][k]
  // are known to sift through the levels below l.
  std::vector<std::vector<std::size_t>> done(c.levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool descended = false;
    for (std::size_t k = 0; k < c.levels_[li].orbit.size() && !descended; ++k) {
      if (done[li].size() < c.levels_[li].orbit.size()) done[li].resize(c.levels_[li].orbit.size(), 0);
      for (std::size_t s = done[li][k]; s < c.levels_[li].generators.size(); ++s) {
        const auto& lv = c.levels_[li];
        const Perm& gen = lv.generators[s];
        const Point img = gen(lv.orbit[k]);
        Perm h = lv.transversal[k] * gen * lv.transversal_inv[lv.slot[img]];
        if (!h.is_identity()) {
          auto [res, j] = c.strip(std::move(h), li + 1);
          if (!res.is_identity()) {
            if (j == c.levels_.size()) {
              c.levels_.push_back(make_level(degree, res.first_moved()));
              done.emplace_back();
            }
            for (std::size_t l = li + 1; l <= j; ++l) c.add_generator(l, res);
            i = static_cast<std::ptrdiff_t>(j);
            descended = true;
            break;
          }
        }
        done[li][k] = s + 1;
      }
    }
    if (!descended) --i;
  }
  return c;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree > kDegreeCap) throw CapExceeded("degree exceeds cap of 10^6");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] { cache_->chain = StabChain::build(degree_, generators_); });
  return *cache_->chain;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw PreconditionError("degree mismatch in contains");
  return chain().contains(g);
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers

std::vector<Point> orbit(const PermGroup& g, Point alpha) {
  if (alpha >= g.degree()) throw PreconditionError("orbit: point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{alpha};
  seen[alpha] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& s : g.generators()) {
      const Point y = s(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, x);
    for (auto y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::size_t> orbit_sizes(const PermGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(g)) sizes.push_back(o.size());
  return sizes;
}

bool is_transitive(const PermGroup& g) {
  return g.degree() > 0 && orbit(g, 0).size() == g.degree();
}

PermGroup point_stabilizer(const PermGroup& g, Point alpha) {
  if (alpha >= g.degree()) throw PreconditionError("point_stabilizer: point out of range");
  const auto chain = StabChain::build(g.degree(), g.generators(), {alpha});
  if (chain.levels().size() < 2) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), chain.levels()[1].generators);
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& x) { return g.contains(x); });
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool normal_in(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) throw PreconditionError("normal_in: H is not contained in G");
  for (const auto& x : h.generators())
    for (const auto& s : g.generators())
      if (!h.contains(x.conjugate(s))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& s) {
  std::vector<Perm> gens;
  for (const auto& x : s)
    if (!x.is_identity()) gens.push_back(x);
  PermGroup h(g.degree(), gens);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const auto& t : g.generators()) {
      Perm c = gens[k].conjugate(t);
      if (!h.contains(c)) {
        gens.push_back(std::move(c));
        h = PermGroup(g.degree(), gens);
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

PermGroup join(const PermGroup& g, const std::vector<Perm>& extra) {
  auto gens = g.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(g.degree(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Quotients

Perm least_in_coset(const StabChain& chain, const Perm& x) {
  Perm cur = x;
  for (const auto& lv : chain.levels()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < lv.orbit.size(); ++k)
      if (cur(lv.orbit[k]) < cur(lv.orbit[best])) best = k;
    if (best != 0) cur = lv.transversal[best] * cur;
  }
  return cur;
}

CosetAction coset_action(const PermGroup& g, const PermGroup& n) {
  if (!normal_in(n, g)) throw PreconditionError("quotient_action: N is not normal in G");

  std::set<Point> moved;
  for (const auto& x : n.generators())
    for (Point p = 0; p < x.degree(); ++p)
      if (x(p) != p) moved.insert(p);
  const auto chain = StabChain::build(n.degree(), n.generators(), {moved.begin(), moved.end()});

  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<Perm> reps{Perm(g.degree())};
  index.emplace(reps.front(), 0);
  std::vector<std::vector<std::uint32_t>> edges;  // edges[k][s]
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<std::uint32_t> row;
    for (const auto& s : g.generators()) {
      Perm y = least_in_coset(chain, reps[k] * s);
      auto [it, fresh] = index.emplace(y, static_cast<std::uint32_t>(reps.size()));
      if (fresh) {
        reps.push_back(std::move(y));
        if (reps.size() > kQuotientIndexCap) throw CapExceeded("quotient index exceeds cap of 10^4");
      }
      row.push_back(it->second);
    }
    edges.push_back(std::move(row));
  }

  std::vector<std::uint32_t> order(reps.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return reps[a] < reps[b]; });
  std::vector<std::uint32_t> label(reps.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) label[order[k]] = k;

  std::vector<Perm> image_gens;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    std::vector<Point> img(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) img[label[k]] = label[edges[k][s]];
    image_gens.emplace_back(std::move(img));
  }
  CosetAction out{PermGroup(reps.size(), std::move(image_gens)), {}};
  out.representatives.reserve(reps.size());
  for (auto k : order) out.representatives.push_back(reps[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Text format

void write_perm_group(std::ostream& os, const PermGroup& g) {
  os << "degree " << g.degree() << '\n';
  for (const auto& x : g.generators()) os << x.to_string() << '\n';
}

PermGroup read_perm_group(std::istream& is) {
  std::string line;
  std::size_t degree = 0;
  bool header = false;
  std::vector<Perm> gens;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!header) {
      std::istringstream hs(line);
      std::string word;
      long long n = -1;
      if (!(hs >> word >> n) || word != "degree" || n < 0) throw FormatError("expected 'degree n' header");
      std::string extra;
      if (hs >> extra) throw FormatError("trailing text after degree header");
      degree = static_cast<std::size_t>(n);
      header = true;
      continue;
    }
    Perm p = Perm::parse(line);
    if (p.degree() != degree) throw FormatError("permutation length does not match declared degree");
    gens.push_back(std::move(p));
  }
  if (!header) throw FormatError("missing 'degree n' header");
  return PermGroup(degree, std::move(gens));
}

}  // namespace gen32
