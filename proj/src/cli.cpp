#include "ddl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ddl/compiler.hpp"
#include "ddl/engine.hpp"
#include "ddl/error.hpp"
#include "ddl/parser.hpp"
#include "ddl/postulates.hpp"
#include "ddl/ranking.hpp"

namespace ddl::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  std::string output;  // empty: standard output
  std::string format = "text";
  std::string oracle;
  double timeout = 30;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::string dump_dir;
  std::string query;
  std::string mode;
};

// A finished command: the report and the exit status it implies.
struct Result {
  json report;
  int status = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::optional<OracleConfig> oracle_config(const RunConfig& cfg) {
  if (cfg.oracle.empty()) return std::nullopt;
  return OracleConfig{cfg.oracle, cfg.timeout};
}

json literals(const Interpretation& interp) {
  json out = json::array();
  for (const auto& l : interp) {
    json args = json::array();
    for (const auto& t : l.args) args.push_back(t.name);
    out.push_back({{"negated", l.negated}, {"predicate", l.predicate}, {"args", args}});
  }
  return out;
}

std::string literal_text(const json& l) {
  std::string s = l["negated"].get<bool>() ? "-" : "";
  s += l["predicate"].get<std::string>() + "(";
  for (std::size_t i = 0; i < l["args"].size(); ++i) {
    s += (i ? ", " : "") + l["args"][i].get<std::string>();
  }
  return s + ")";
}

Result cmd_rank(const RunConfig& cfg) {
  const KnowledgeBase kb = parse_kb(read_file(cfg.input));
  Reasoner reasoner(oracle_config(cfg));
  const RankedKB rkb = compute_ranking(reasoner, kb);

  json r{{"command", "rank"}, {"ranks", json::array()}, {"promoted", json::array()}};
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& [axiom, k] : rkb.rank) ranked.emplace_back(k, axiom.str());
  std::sort(ranked.begin(), ranked.end());
  for (const auto& [k, axiom] : ranked) r["ranks"].push_back({{"axiom", axiom}, {"rank", k}});
  for (const auto& axiom : rkb.promoted) r["promoted"].push_back(axiom.strict().str());
  json sizes = json::array();
  for (const auto& e : rkb.exceptionality_seq) sizes.push_back(e.size());
  r["sequence_sizes"] = sizes;
  json concepts = json::array();
  for (const auto& name : kb.signature.concepts) {
    concepts.push_back({{"concept", name}, {"rank", rank_of_concept(reasoner, rkb, Concept::atom(name)).str()}});
  }
  r["concept_ranks"] = concepts;
  return {r, 0};
}

Result cmd_compile(const RunConfig& cfg) {
  const KnowledgeBase kb = parse_kb(read_file(cfg.input));
  Reasoner reasoner(oracle_config(cfg));
  const DlProgram program = compile(compute_ranking(reasoner, kb));

  json r{{"command", "compile"}, {"program", to_string(program)}};
  json lambda = json::array();
  for (const auto& u : program.lambda) lambda.push_back(u.str());
  r["lambda"] = lambda;
  json rules = json::array();
  for (const auto& rule : program.rules) rules.push_back(rule.str());
  r["rules"] = rules;
  return {r, 0};
}

Result cmd_solve(const RunConfig& cfg) {
  std::string mode = cfg.mode;
  if (mode.empty()) mode = cfg.query.empty() ? "all" : "cautious";
  if (mode == "all" && !cfg.query.empty()) throw UsageError("--mode all takes no --query");
  if (mode != "all" && cfg.query.empty()) throw UsageError("--mode " + mode + " needs --query");

  const KnowledgeBase kb = parse_kb(read_file(cfg.input));
  Reasoner reasoner(oracle_config(cfg));
  const RankedKB rkb = compute_ranking(reasoner, kb);
  const DlProgram program = compile(rkb);
  Engine engine(reasoner, rkb.strict);

  json r{{"command", "solve"}, {"mode", mode}};
  if (mode == "all") {
    json sets = json::array();
    for (const auto& s : engine.strong_answer_sets(program)) sets.push_back(literals(s));
    r["answer_sets"] = sets;
    return {r, 0};
  }

  const Literal query = parse_literal(cfg.query);
  r["query"] = query.str();
  const auto verdict = engine.consequence(
      program, query, mode == "brave" ? ConsequenceMode::Brave : ConsequenceMode::Cautious);
  switch (verdict) {
    case Consequence::Holds:
      r["result"] = "yes";
      return {r, 0};
    case Consequence::Fails:
      r["result"] = "no";
      return {r, 1};
    case Consequence::NoAnswerSet:
      r["result"] = "no answer set";
      return {r, mode == "brave" ? 1 : 2};
  }
  return {r, 2};
}

Result cmd_entail(const RunConfig& cfg) {
  const KnowledgeBase kb = parse_kb(read_file(cfg.input));
  const InclusionQuery q = parse_inclusion_query(cfg.query, kb.signature);
  Reasoner reasoner(oracle_config(cfg));
  const RankedKB rkb = compute_ranking(reasoner, kb);
  const bool yes = q.defeasible ? rational_closure_entails(reasoner, rkb, q.lhs, q.rhs)
                                : reasoner.entails(rkb.strict, q.lhs, q.rhs);
  json r{{"command", "entail"},
         {"query", q.lhs.str() + (q.defeasible ? " ~[= " : " [= ") + q.rhs.str()},
         {"defeasible", q.defeasible},
         {"result", yes ? "yes" : "no"}};
  return {r, yes ? 0 : 1};
}

json tally_json(const PostulateTally& t) {
  json seeds = json::array();
  for (auto s : t.failing_seeds) seeds.push_back(s);
  return {{"name", t.name},
          {"applicable", t.applicable},
          {"failed", t.failed},
          {"discarded", t.discarded},
          {"failing_seeds", seeds}};
}

Result cmd_check_postulates(const RunConfig& cfg) {
  PostulateOptions options;
  options.seed = cfg.seed;
  options.cases = cfg.cases;
  options.dump_dir = cfg.dump_dir;
  options.oracle = oracle_config(cfg);
  const PostulateReport report = check_postulates(options);

  json r{{"command", "check-postulates"},
         {"seed", report.seed},
         {"cases", report.cases},
         {"cases_without_answer_set", report.cases_without_answer_set}};
  json properties = json::array();
  for (const auto* group : {&report.rational, &report.answer_set}) {
    for (const auto& t : *group) properties.push_back(tally_json(t));
  }
  r["properties"] = properties;
  json dumped = json::array();
  for (const auto& p : report.dumped) dumped.push_back(p.string());
  r["dumped"] = dumped;
  r["result"] = report.ok() ? "pass" : "fail";
  return {r, report.ok() ? 0 : 1};
}

// The text form carries the same fields as the JSON form, one per line.
std::string render_text(const json& r) {
  std::ostringstream out;
  const std::string command = r.at("command");
  if (command == "rank") {
    if (r["ranks"].empty() && r["promoted"].empty()) out << "no defeasible axioms\n";
    for (const auto& e : r["ranks"]) {
      out << "rank " << e["rank"].get<std::size_t>() << "  " << e["axiom"].get<std::string>() << "\n";
    }
    for (const auto& p : r["promoted"]) out << "promoted  " << p.get<std::string>() << "\n";
    if (!r["sequence_sizes"].empty()) {
      out << "sequence sizes:";
      for (const auto& s : r["sequence_sizes"]) out << " " << s.get<std::size_t>();
      out << "\n";
    }
    for (const auto& c : r["concept_ranks"]) {
      out << "concept " << c["concept"].get<std::string>() << "  rank " << c["rank"].get<std::string>()
          << "\n";
    }
  } else if (command == "compile") {
    out << r["program"].get<std::string>();
  } else if (command == "solve") {
    if (r.contains("answer_sets")) {
      if (r["answer_sets"].empty()) out << "no answer set\n";
      for (const auto& s : r["answer_sets"]) {
        out << "{";
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << literal_text(s[i]);
        out << "}\n";
      }
    } else {
      out << r["mode"].get<std::string>() << " " << r["query"].get<std::string>() << ": "
          << r["result"].get<std::string>() << "\n";
    }
  } else if (command == "entail") {
    out << r["query"].get<std::string>() << ": " << r["result"].get<std::string>() << "\n";
  } else if (command == "check-postulates") {
    out << "seed " << r["seed"].get<std::uint64_t>() << ", " << r["cases"].get<std::size_t>()
        << " cases, " << r["cases_without_answer_set"].get<std::size_t>() << " without answer set\n";
    for (const auto& t : r["properties"]) {
      out << t["name"].get<std::string>() << "  applicable " << t["applicable"].get<std::size_t>()
          << "  failed " << t["failed"].get<std::size_t>() << "  discarded "
          << t["discarded"].get<std::size_t>();
      if (!t["failing_seeds"].empty()) {
        out << "  seeds";
        for (const auto& s : t["failing_seeds"]) out << " " << s.get<std::uint64_t>();
      }
      out << "\n";
    }
    for (const auto& p : r["dumped"]) out << "dumped " << p.get<std::string>() << "\n";
    out << r["result"].get<std::string>() << "\n";
  }
  return out.str();
}

void emit(const RunConfig& cfg, const Result& result, std::ostream& out) {
  const std::string body =
      cfg.format == "json" ? result.report.dump(2) + "\n" : render_text(result.report);
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error("cannot write " + cfg.output);
  file << (cfg.format == "json" ? body : result.report.value("program", body));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("DDL_ORACLE")) cfg.oracle = env;

  CLI::App app{"Defeasible description logic knowledge bases compiled to dl-programs", "ddl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--oracle", cfg.oracle, "External entailment oracle command (default: $DDL_ORACLE)");
  app.add_option("--timeout", cfg.timeout, "Oracle timeout in seconds")
      ->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "Rank the defeasible axioms");
  rank->add_option("file", cfg.input)->required();

  auto* comp = app.add_subcommand("compile", "Compile to a dl-program");
  comp->add_option("file", cfg.input)->required();
  comp->add_option("-o,--output", cfg.output, "Write the program here");

  auto* solve = app.add_subcommand("solve", "Strong answer sets and consequences");
  solve->add_option("file", cfg.input)->required();
  solve->add_option("--query", cfg.query, "Ground literal, e.g. -f(b)");
  solve->add_option("--mode", cfg.mode, "all, cautious or brave")
      ->check(CLI::IsMember({"all", "cautious", "brave"}));

  auto* entail = app.add_subcommand("entail", "Rational closure or classical entailment");
  entail->add_option("file", cfg.input)->required();
  entail->add_option("--query", cfg.query, "C ~[= D or C [= D")->required();

  auto* post = app.add_subcommand("check-postulates", "Property checks on random knowledge bases");
  post->add_option("--seed", cfg.seed);
  post->add_option("--cases", cfg.cases)->check(CLI::PositiveNumber);
  post->add_option("--dump-dir", cfg.dump_dir, "Write failing knowledge bases here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Result result;
    if (*rank) result = cmd_rank(cfg);
    else if (*comp) result = cmd_compile(cfg);
    else if (*solve) result = cmd_solve(cfg);
    else if (*entail) result = cmd_entail(cfg);
    else result = cmd_check_postulates(cfg);
    emit(cfg, result, out);
    return result.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << cfg.input << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ddl::cli
