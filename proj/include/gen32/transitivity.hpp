#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gen32/permgroup.hpp"

namespace gen32 {

struct TransitivityReport {
  bool transitive = false;
  bool half_transitive = false;
  bool three_halves = false;
  bool two_transitive = false;
  std::optional<std::uint32_t> rank;  // transitive groups only
  std::optional<bool> primitive;      // transitive groups of degree >= 2
  // Absent when |G| is past the element-enumeration cap.
  std::optional<bool> frobenius;
  bool regular = false;
  bool semiregular = false;
  std::vector<std::size_t> orbit_sizes;  // ascending
};

// Degree 1, or every orbit has the same size s > 1.
bool is_half_transitive(const PermGroup& g);
// Transitive, G_0 nontrivial, and G_0 is half-transitive on the other points.
bool is_three_halves(const PermGroup& g);
// Orbits of G_0 on the whole domain; throws PreconditionError if intransitive.
std::uint32_t rank(const PermGroup& g);
bool is_two_transitive(const PermGroup& g);
// Throws PreconditionError if intransitive or degree < 2.
bool is_primitive(const PermGroup& g);
// Smallest block containing 0 and beta (as a sorted point list).
std::vector<Point> minimal_block(const PermGroup& g, Point beta);
// Transitive, not regular, and only the identity fixes two points.
// Throws CapExceeded past the element cap.
bool is_frobenius(const PermGroup& g);
bool is_semiregular(const PermGroup& g);
bool is_regular(const PermGroup& g);

TransitivityReport transitivity_report(const PermGroup& g);

}  // namespace gen32
