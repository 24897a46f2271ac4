#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gen32/elements.hpp"
#include "gen32/matgroup.hpp"
#include "gen32/permgroup.hpp"

namespace gen32 {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct GenTuple {
  std::vector<Perm> elements;
  bool verified = false;  // <elements> == G, checked by stabilizer chain
};

enum class DMethod { Exhaustive, ShortcutLM, BoundMeet };
std::string to_string(DMethod m);

// d(G) with a verified witness of exactly `value` elements.
struct DResult {
  std::uint32_t value = 0;
  GenTuple witness;
  DMethod method = DMethod::Exhaustive;
};

// True iff <tuple> = G. Throws PreconditionError if an entry lies outside G.
bool generates(const PermGroup& g, const std::vector<Perm>& tuple);

struct DSearchOptions {
  std::uint64_t budget = kDefaultBudget;
  // Fix the first slot to conjugacy class representatives.
  bool conjugacy_reduction = true;
};

// Exact d(G) by exhaustive tuple search (|G| <= 10^5). Levels whose projected
// test count exceeds the budget are settled only if the abelian lower bound
// meets a found upper bound; otherwise throws Indeterminate.
DResult d_exact(const PermGroup& g, const DSearchOptions& opts = {});
DResult d_exact(const ElementTable& t, const DSearchOptions& opts = {});

// Largest rank of an elementary abelian quotient G/(G' G^l). A lower bound
// for d(G).
std::uint32_t d_lower_bound_abelian(const PermGroup& g);

// d(V x| G0) = max(2, d(G0)) for irreducible nontrivial G0. The G0 witness
// is lifted to the affine group by translation adjustments and re-verified.
// Throws PreconditionError for reducible or trivial G0.
DResult d_affine(const MatrixGroup& g0, const DSearchOptions& opts = {});

// Sylow subgroups cyclic for odd primes; cyclic or generalized quaternion
// for 2. Equivalent to "every abelian subgroup is cyclic".
bool all_abelian_subgroups_cyclic(const PermGroup& g);

}  // namespace gen32
