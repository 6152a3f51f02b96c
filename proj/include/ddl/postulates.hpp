#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ddl/oracle.hpp"

namespace ddl {

/// Outcome of one property over all generated cases. A case is applicable
/// when the premises hold; discarded cases are those where the answer set
/// is not shared by every knowledge base the property mentions.
struct PostulateTally {
  std::string name;
  std::size_t applicable = 0;
  std::size_t failed = 0;
  std::size_t discarded = 0;
  std::vector<std::uint64_t> failing_seeds;
};

struct PostulateReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  /// Cases whose compiled program had no strong answer set (no ⊨_{P^I} checks).
  std::size_t cases_without_answer_set = 0;
  std::vector<PostulateTally> rational;       // REF, LLE, RW, CT, OR, RM
  std::vector<PostulateTally> answer_set;     // REF_DL … RM_DL
  std::vector<std::filesystem::path> dumped;  // knowledge bases of failing cases

  bool ok() const;
};

struct PostulateOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  /// Where to write failing knowledge bases; nothing is written when empty.
  std::filesystem::path dump_dir;
  std::optional<OracleConfig> oracle;
};

/// Seed of the i-th case; `check_postulates` with this seed and one case
/// replays it.
inline std::uint64_t case_seed(std::uint64_t seed, std::size_t i) { return seed + i; }

/// Generates `cases` random knowledge bases and checks the rational-closure
/// postulates and the answer-set entailment postulates on each.
PostulateReport check_postulates(const PostulateOptions& options);

}  // namespace ddl
