#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gen32/gens.hpp"

namespace gen32 {

struct ClaimVerdict {
  std::string claim_id;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  std::int64_t runtime_ms = 0;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

std::vector<ClaimVerdict> verify_table1(const VerifyOptions& opts = {});
// d_exact on the whole affine G_1 against the shortcut value.
std::vector<ClaimVerdict> verify_affine_shortcut(const VerifyOptions& opts = {});
// G_1, G_4 by conjugacy in GL_2(q); G_3 by invariants of S_0(9) over GF(3).
std::vector<ClaimVerdict> verify_isomorphism(const VerifyOptions& opts = {});
std::vector<ClaimVerdict> verify_lemma7(const std::vector<std::uint32_t>& qs, const VerifyOptions& opts = {});
std::vector<ClaimVerdict> verify_table2(const VerifyOptions& opts = {});
std::vector<ClaimVerdict> verify_corollary3(int i, const VerifyOptions& opts = {});
std::vector<ClaimVerdict> verify_corollary1(const VerifyOptions& opts = {});
std::vector<ClaimVerdict> verify_generation_lemmas(const VerifyOptions& opts = {});

const std::vector<std::uint32_t>& default_lemma7_qs();
const std::vector<std::string>& suite_names();  // excluding "all"
// Verdicts sorted by claim_id. Throws PreconditionError on an unknown suite.
std::vector<ClaimVerdict> run_suite(const std::string& suite, const VerifyOptions& opts = {},
                                    const std::vector<std::uint32_t>& qs = default_lemma7_qs());

nlohmann::json to_json(const ClaimVerdict& v);
// {"schema", "suite", "verdicts", "passed", "failed"}
nlohmann::json verdicts_json(const std::string& suite, const std::vector<ClaimVerdict>& vs);

}  // namespace gen32
