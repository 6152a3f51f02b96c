#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ddl/axiom.hpp"
#include "ddl/tableau.hpp"

namespace ddl {

struct SubsumptionGoal {
  Concept lhs;
  Concept rhs;
};

struct SatisfiabilityGoal {
  Concept target;
};

using OracleGoal = std::variant<SubsumptionGoal, SatisfiabilityGoal>;

/// A classical reasoning question over a strict theory.
struct OracleQuery {
  std::vector<Axiom> tbox;
  std::vector<Axiom> rbox;
  OracleGoal goal;
};

enum class VerdictSource { Internal, External };

struct OracleVerdict {
  bool answer = false;
  VerdictSource source = VerdictSource::Internal;

  bool operator==(const OracleVerdict&) const = default;
};

/// How to reach an external reasoner: a shell command speaking the line
/// protocol below, and a per-query timeout.
struct OracleConfig {
  std::string command;
  double timeout_seconds = 30.0;
};

/// Request text sent to an external oracle:
///
///     QUERY
///     <canonical knowledge base serialization>
///     ASK <C> [= <D>
///     END
///
/// Satisfiability goals are asked as `ASK C [= BOT` and the answer negated.
std::string render_oracle_request(const OracleQuery& query);

/// Runs the configured command once, feeds it the request on standard input
/// and reads a single `yes`/`no` line back.
///
/// Throws OracleSpawnError, OracleProtocolError or OracleTimeout.
OracleVerdict external_entails(const OracleQuery& query, const OracleConfig& endpoint);

/// Classical entailment service shared by ranking, compilation and
/// evaluation. Queries inside ALCO go to the internal tableau; anything else
/// goes to the external oracle when one is configured. Verdicts are memoized
/// per (theory, goal) and the memo table is safe to share across threads.
class Reasoner {
 public:
  Reasoner() = default;
  explicit Reasoner(std::optional<OracleConfig> external) : external_(std::move(external)) {}

  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  OracleVerdict decide(const Theory& theory, const OracleGoal& goal);
  OracleVerdict decide(const OracleQuery& query);

  bool entails(const Theory& theory, const Concept& lhs, const Concept& rhs) {
    return decide(theory, SubsumptionGoal{lhs, rhs}).answer;
  }
  bool is_satisfiable(const Theory& theory, const Concept& c) {
    return decide(theory, SatisfiabilityGoal{c}).answer;
  }

  struct Stats {
    std::size_t queries = 0;
    std::size_t cache_hits = 0;
    std::size_t internal_calls = 0;
    std::size_t external_calls = 0;
    std::size_t tableau_steps = 0;
  };
  Stats stats() const;

  const std::optional<OracleConfig>& external() const { return external_; }

  TableauOptions tableau_options;

 private:
  std::optional<OracleConfig> external_;
  mutable std::mutex memo_mutex_;
  std::mutex external_mutex_;
  std::unordered_map<std::string, OracleVerdict> memo_;
  Stats stats_;
};

}  // namespace ddl
