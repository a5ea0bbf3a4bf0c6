#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace siflab {

/// One reproducible result of the workbench.
enum class ResultId {
  Ex1,
  Ex2,
  Ex3,
  Prop1,
  Prop2,
  Thm1,
  Thm2,
  CorConj,
  Thm3,
  Thm4,
  PropDisj,
  Thm5,
  PropGenConj,
  CorDgni,
  PropZlDisj,
  PropNosZl,
  ThmZlConj,
  PropPspSif,
  LemSwap,
  LemAllSys,
};

/// All ids in declaration order.
const std::vector<ResultId>& all_result_ids();
const char* result_id_name(ResultId id);
/// Accepts the names printed by result_id_name (case-insensitive). Throws
/// UnknownResultIdError otherwise.
ResultId parse_result_id(std::string_view name);

struct ResultOutcome {
  ResultId id;
  bool pass = false;
  /// Witnesses, counts and any offending system, type or pair.
  std::vector<std::string> evidence;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<ResultOutcome> results;

  bool all_pass() const;
  /// Runtimes are left out unless requested so that reports are
  /// reproducible byte for byte.
  nlohmann::json to_json(bool with_runtime = false) const;
  std::string to_text(bool with_runtime = false) const;
};

struct VerifyOptions {
  std::filesystem::path fixtures;
  /// Generated strategy systems used by the NOS results.
  std::size_t corpus_size = 120;
  std::uint64_t seed = 7;
  /// Randomized cases for the conjunction identities.
  std::size_t random_cases = 1000;
  /// Largest number of systems enumerated per async universe before
  /// switching to sampling.
  std::uint64_t psp_exhaustive_cap = std::uint64_t{1} << 16;

  VerifyOptions();
};

/// Runs the requested reproductions (all when `ids` is empty) in the given
/// order. Missing fixtures surface as ParseError.
VerificationReport verify_paper(std::span<const ResultId> ids = {},
                                const VerifyOptions& options = {});

}  // namespace siflab
