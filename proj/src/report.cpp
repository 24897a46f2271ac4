#include "gen32/report.hpp"

#include <chrono>

#include "gen32/errors.hpp"

namespace gen32 {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

GroupReport analyze(const std::string& name, const PermGroup& g, const DSearchOptions& opts,
                    const std::optional<MatrixGroup>& g0) {
  GroupReport r;
  r.name = name;
  r.degree = g.degree();

  auto t0 = Clock::now();
  r.order = g.order();
  r.timing_ms["chain"] = ms_since(t0);

  t0 = Clock::now();
  r.transitivity = transitivity_report(g);
  if (r.transitivity.transitive && g.degree() > 0) r.stabilizer_order = point_stabilizer(g, 0).order();
  r.timing_ms["transitivity"] = ms_since(t0);

  t0 = Clock::now();
  try {
    if (g0 && is_irreducible(*g0) && !to_perm_group(*g0, VectorDomain::Nonzero).is_trivial())
      r.d = d_affine(*g0, opts);
    else
      r.d = d_exact(g, opts);
  } catch (const Indeterminate& e) {
    r.d_error = std::string("indeterminate: ") + e.what() + " (lower " + std::to_string(e.lower()) + ", upper " +
                std::to_string(e.upper()) + ")";
  } catch (const CapExceeded& e) {
    r.d_error = std::string("cap exceeded: ") + e.what();
  } catch (const PreconditionError& e) {
    r.d_error = std::string("precondition: ") + e.what();
  }
  r.timing_ms["d"] = ms_since(t0);
  return r;
}

json to_json(const TransitivityReport& r) {
  json j = {{"transitive", r.transitive},
            {"half_transitive", r.half_transitive},
            {"three_halves", r.three_halves},
            {"two_transitive", r.two_transitive},
            {"regular", r.regular},
            {"semiregular", r.semiregular},
            {"orbit_sizes", r.orbit_sizes}};
  j["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  j["primitive"] = r.primitive ? json(*r.primitive) : json(nullptr);
  j["frobenius"] = r.frobenius ? json(*r.frobenius) : json(nullptr);
  return j;
}

json to_json(const DResult& d) {
  json w = json::array();
  for (const auto& x : d.witness.elements) w.push_back(x.to_string());
  return {{"value", d.value}, {"method", to_string(d.method)}, {"witness", w}, {"verified", d.witness.verified}};
}

json to_json(const GroupReport& r) {
  json j = {{"schema", "gen32/1"},
            {"name", r.name},
            {"degree", r.degree},
            {"order", r.order},
            {"transitivity", to_json(r.transitivity)},
            {"timing_ms", r.timing_ms}};
  j["stabilizer_order"] = r.stabilizer_order ? json(*r.stabilizer_order) : json(nullptr);
  if (r.d)
    j["d"] = to_json(*r.d);
  else
    j["d"] = {{"indeterminate", true}, {"reason", r.d_error}};
  return j;
}

}  // namespace gen32
