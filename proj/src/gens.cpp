#include "gen32/gens.hpp"

#include <algorithm>
#include <limits>

#include "gen32/arith.hpp"
#include "gen32/constructions.hpp"
#include "gen32/errors.hpp"

namespace gen32 {

std::string to_string(DMethod m) {
  switch (m) {
    case DMethod::Exhaustive: return "exhaustive";
    case DMethod::ShortcutLM: return "shortcut-LM";
    case DMethod::BoundMeet: return "bound-meet";
  }
  return "unknown";
}

bool generates(const PermGroup& g, const std::vector<Perm>& tuple) {
  for (const auto& x : tuple)
    if (!g.contains(x)) throw PreconditionError("generates: tuple element outside the group");
  return PermGroup(g.degree(), tuple).order() == g.order();
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Odometer over (first slot from `firsts`, rest from all elements), last slot
// fastest. Calls visit(tuple) until it returns true or `limit` tests ran.
// Returns the number of tests performed.
template <class Visit>
std::uint64_t enumerate_tuples(const ElementTable& t, const std::vector<Index>& firsts, std::uint32_t k,
                               std::uint64_t limit, Visit&& visit) {
  if (k == 0 || firsts.empty()) return 0;
  std::vector<std::size_t> pos(k, 0);
  std::vector<Index> tuple(k, 0);
  std::uint64_t tests = 0;
  while (tests < limit) {
    tuple[0] = firsts[pos[0]];
    for (std::uint32_t s = 1; s < k; ++s) tuple[s] = static_cast<Index>(pos[s]);
    ++tests;
    if (visit(tuple)) return tests;
    std::int64_t s = k - 1;
    for (; s >= 0; --s) {
      const std::size_t bound = s == 0 ? firsts.size() : t.size();
      if (++pos[s] < bound) break;
      pos[s] = 0;
    }
    if (s < 0) break;
  }
  return tests;
}

DResult make_result(const ElementTable& t, const std::vector<Index>& idx, DMethod method) {
  DResult r;
  r.value = static_cast<std::uint32_t>(idx.size());
  for (auto i : idx) r.witness.elements.push_back(t[i]);
  r.witness.verified = generates(t.group(), r.witness.elements);
  if (!r.witness.verified) throw std::logic_error("d_exact: witness failed verification");
  r.method = method;
  return r;
}

}  // namespace

DResult d_exact(const ElementTable& t, const DSearchOptions& opts) {
  if (t.size() == 1) {
    DResult r;
    r.witness.verified = true;
    return r;
  }
  // a generating tuple can be reordered to start with a non-identity entry
  std::vector<Index> firsts;
  if (opts.conjugacy_reduction) {
    for (auto i : t.class_representatives())
      if (i != 0) firsts.push_back(i);
  } else {
    for (Index i = 1; i < t.size(); ++i) firsts.push_back(i);
  }

  std::uint32_t refuted = 0;
  std::vector<Index> found;
  auto test = [&](const std::vector<Index>& tuple) {
    if (!t.generates(tuple)) return false;
    found = tuple;
    return true;
  };

  for (std::uint32_t k = 1;; ++k) {
    std::uint64_t projected = firsts.size();
    for (std::uint32_t s = 1; s < k; ++s) projected = sat_mul(projected, t.size());

    if (projected <= opts.budget) {
      if (enumerate_tuples(t, firsts, k, projected, test) > 0 && !found.empty())
        return make_result(t, found, DMethod::Exhaustive);
      refuted = k;
      continue;
    }

    const std::uint32_t lower = std::max(d_lower_bound_abelian(t.group()), refuted + 1);
    const std::uint32_t level = std::max(k, lower);
    enumerate_tuples(t, firsts, level, opts.budget, test);
    if (!found.empty()) {
      if (lower >= level) return make_result(t, found, DMethod::BoundMeet);
      throw Indeterminate("d_exact: bounds do not meet within budget", lower, level);
    }
    throw Indeterminate("d_exact: no generating tuple found within budget", lower, 0);
  }
}

DResult d_exact(const PermGroup& g, const DSearchOptions& opts) { return d_exact(ElementTable(g), opts); }

std::uint32_t d_lower_bound_abelian(const PermGroup& g) {
  const auto order = g.order();
  if (order > kElementCap) throw CapExceeded("d_lower_bound_abelian: |G| exceeds 10^5");
  if (order == 1) return 0;
  const PermGroup d = derived_subgroup(g);
  const auto index = order / d.order();
  std::uint32_t best = 0;
  for (auto l : prime_divisors(index)) {
    std::vector<Perm> extra;
    for (const auto& s : g.generators()) extra.push_back(s.pow(static_cast<long long>(l)));
    const PermGroup n = join(d, extra);
    best = std::max(best, valuation(order / n.order(), l));
  }
  return best;
}

DResult d_affine(const MatrixGroup& g0, const DSearchOptions& opts) {
  const PermGroup inner_group = to_perm_group(g0, VectorDomain::Nonzero);
  if (inner_group.is_trivial()) throw PreconditionError("d_affine: G0 must be nontrivial");
  if (!is_irreducible(g0)) throw PreconditionError("d_affine: G0 must act irreducibly");

  const DResult inner = d_exact(inner_group, opts);
  const PermGroup affine = affine_group(g0);
  const VectorEncoding enc(g0.field(), g0.dim());

  std::vector<Perm> base;
  for (const auto& x : inner.witness.elements) base.push_back(add_fixed_zero(x));

  DResult r;
  r.value = std::max<std::uint32_t>(2, inner.value);
  r.method = DMethod::ShortcutLM;
  auto accept = [&](std::vector<Perm> tuple) {
    if (!generates(affine, tuple)) return false;
    r.witness.elements = std::move(tuple);
    r.witness.verified = true;
    return true;
  };

  if (inner.value == 1) {
    for (std::uint32_t v = 1; v < enc.size(); ++v)
      if (accept({base[0], translation(enc, enc.decode(v))})) return r;
  } else {
    if (accept(base)) return r;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::uint32_t v = 1; v < enc.size(); ++v) {
        auto tuple = base;
        tuple[i] = tuple[i] * translation(enc, enc.decode(v));
        if (accept(std::move(tuple))) return r;
      }
  }
  throw Indeterminate("d_affine: no translation lift of the G0 witness generates", r.value, 0);
}

bool all_abelian_subgroups_cyclic(const PermGroup& g) {
  const auto order = g.order();
  if (order > kElementCap) throw CapExceeded("all_abelian_subgroups_cyclic: |G| exceeds 10^5");
  for (auto l : prime_divisors(order)) {
    const PermGroup p = sylow_subgroup(g, l);
    if (is_cyclic(p)) continue;
    if (l == 2 && is_generalized_quaternion(p)) continue;
    return false;
  }
  return true;
}

}  // namespace gen32
