#include "ddl/postulates.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <random>

#include "ddl/compiler.hpp"
#include "ddl/engine.hpp"
#include "ddl/generator.hpp"
#include "ddl/ranking.hpp"

namespace ddl {

namespace {

enum Rat { REF, LLE, RW, CT, OR, RM };

constexpr int kTriples = 30;
constexpr int kDlSamples = 12;

Concept conj(const Concept& a, const Concept& b) { return simplify(conjunction_of({a, b})); }
Concept disj(const Concept& a, const Concept& b) { return simplify(disjunction_of({a, b})); }
Concept neg(const Concept& a) { return simplify(negated_nnf(a)); }

Axiom assertion(const Concept& c, const std::string& individual) {
  return Axiom::inclusion(Concept::nominal(individual), c);
}

// Everything one generated case needs, with memo tables for the repeated
// rational-closure and answer-set queries.
class Case {
 public:
  Case(std::uint64_t seed, const std::optional<OracleConfig>& oracle)
      : seed_(seed), kb_(random_kb(seed)), reasoner_(oracle), draw_(seed ^ 0x9e3779b97f4a7c15ULL) {
    rkb_ = compute_ranking(reasoner_, kb_);
    for (const auto& name : kb_.signature.concepts) {
      pool_.push_back(Concept::atom(name));
      pool_.push_back(Concept::negation(Concept::atom(name)));
    }
    for (const auto& a : kb_.tbox) {
      if (a.kind() == AxiomKind::ConceptEquality) pool_.push_back(a.rhs());
    }
    individuals_.assign(kb_.signature.individuals.begin(), kb_.signature.individuals.end());
  }

  const KnowledgeBase& kb() const { return kb_; }
  std::uint64_t seed() const { return seed_; }

  void check_rational(std::vector<PostulateTally>& t, bool& failed) {
    auto verdict = [&](Rat p, bool ok) {
      ++t[p].applicable;
      if (!ok) {
        ++t[p].failed;
        if (t[p].failing_seeds.empty() || t[p].failing_seeds.back() != seed_) {
          t[p].failing_seeds.push_back(seed_);
        }
        failed = true;
      }
    };

    for (const auto& c : pool_) verdict(REF, rc(c, c));

    for (const auto& c : pool_) {
      for (const auto& d : pool_) {
        if (c == d || !equivalent(c, d)) continue;
        for (const auto& f : pool_) {
          if (rc(c, f)) verdict(LLE, rc(d, f));
        }
      }
    }

    for (int k = 0; k < kTriples; ++k) {
      const Concept& c = pick(pool_);
      const Concept& d = pick(pool_);
      const Concept& f = pick(pool_);
      if (rc(c, d)) {
        verdict(RW, rc(c, disj(d, f)));
        if (classical(d, f)) verdict(RW, rc(c, f));
        if (rc(conj(c, d), f)) verdict(CT, rc(c, f));
      }
      if (rc(c, f) && rc(d, f)) verdict(OR, rc(disj(c, d), f));
      if (rc(c, f) && !rc(c, neg(d))) verdict(RM, rc(conj(c, d), f));
    }
  }

  // Returns false when the compiled program has no strong answer set.
  bool check_answer_set(std::vector<PostulateTally>& t, bool& failed) {
    program_ = compile(rkb_);
    ground_ = ground(program_);
    const auto sets = engine({}).strong_answer_sets(ground_);
    if (sets.empty()) return false;
    answer_set_ = sets.front();

    auto verdict = [&](Rat p, bool ok) {
      ++t[p].applicable;
      if (!ok) {
        ++t[p].failed;
        if (t[p].failing_seeds.empty() || t[p].failing_seeds.back() != seed_) {
          t[p].failing_seeds.push_back(seed_);
        }
        failed = true;
      }
    };
    auto discard = [&](Rat p) { ++t[p].discarded; };

    for (const auto& a : rkb_.tbox_star) {
      if (a.kind() != AxiomKind::ConceptInclusion || !a.lhs().is(ConceptKind::Nominals) ||
          a.lhs().individuals().size() != 1) {
        continue;
      }
      verdict(REF, holds({}, a.rhs(), a.lhs().individuals().front()));
    }

    for (int k = 0; k < kDlSamples; ++k) {
      const Concept& c = pick(pool_);
      const Concept& d = pick(pool_);
      const Concept& e = pick(pool_);
      const std::string& a = pick(individuals_);
      const std::string& b = pick(individuals_);
      const Axiom db = assertion(d, b);

      if (holds({}, c, a)) {
        verdict(RW, holds({}, disj(c, e), a));
        if (classical(c, e)) verdict(RW, holds({}, e, a));
      }

      // D and a syntactically different but equivalent E.
      for (const Concept& eq : {Concept::negation(Concept::negation(d)), e}) {
        if (eq == e && (d == e || !equivalent(d, e))) continue;
        const Axiom eb = assertion(eq, b);
        if (!shared({db}) || !shared({eb})) {
          discard(LLE);
        } else if (holds({db}, c, a)) {
          verdict(LLE, holds({eb}, c, a));
        }
      }

      if (holds({}, d, b)) {
        if (!shared({db})) {
          discard(CT);
        } else if (holds({db}, c, a)) {
          verdict(CT, holds({}, c, a));
        }
      }

      {
        const Axiom eb = assertion(e, b);
        const Axiom deb = assertion(disj(d, e), b);
        if (!shared({db}) || !shared({eb}) || !shared({deb})) {
          discard(OR);
        } else if (holds({db}, c, a) && holds({eb}, c, a)) {
          verdict(OR, holds({deb}, c, a));
        }
      }

      if (holds({}, c, a) && !holds({}, neg(d), b)) {
        if (!shared({db})) {
          discard(RM);
        } else {
          verdict(RM, holds({db}, c, a));
        }
      }
    }
    return true;
  }

 private:
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(draw_() % v.size())];
  }

  bool rc(const Concept& c, const Concept& d) {
    const std::string key = c.str() + " ~[= " + d.str();
    if (auto it = rc_memo_.find(key); it != rc_memo_.end()) return it->second;
    const bool v = rational_closure_entails(reasoner_, rkb_, c, d);
    rc_memo_.emplace(key, v);
    return v;
  }

  bool classical(const Concept& c, const Concept& d) { return reasoner_.entails(rkb_.strict, c, d); }
  bool equivalent(const Concept& c, const Concept& d) { return classical(c, d) && classical(d, c); }

  std::string key_of(const std::vector<Axiom>& extra) const {
    std::string key;
    for (const auto& a : extra) key += a.line();
    return key;
  }

  Engine& engine(const std::vector<Axiom>& extra) {
    auto& slot = engines_[key_of(extra)];
    if (!slot) slot = std::make_unique<Engine>(reasoner_, rkb_.strict.with(extra));
    return *slot;
  }

  bool shared(const std::vector<Axiom>& extra) {
    const std::string key = key_of(extra);
    if (auto it = shared_memo_.find(key); it != shared_memo_.end()) return it->second;
    const bool v = engine(extra).is_strong_answer_set(ground_, answer_set_);
    shared_memo_.emplace(key, v);
    return v;
  }

  // ⟨L ∪ extra, P⟩ ⊨_{P^I} c(a).
  bool holds(const std::vector<Axiom>& extra, const Concept& c, const std::string& a) {
    return engine(extra).entails_under_answer_set(ground_, answer_set_, c, a);
  }

  std::uint64_t seed_;
  KnowledgeBase kb_;
  Reasoner reasoner_;
  std::mt19937_64 draw_;
  RankedKB rkb_;
  std::vector<Concept> pool_;
  std::vector<std::string> individuals_;
  std::map<std::string, bool> rc_memo_;

  DlProgram program_;
  GroundProgram ground_;
  Interpretation answer_set_;
  std::map<std::string, std::unique_ptr<Engine>> engines_;
  std::map<std::string, bool> shared_memo_;
};

std::vector<PostulateTally> tallies(const std::vector<std::string>& names) {
  std::vector<PostulateTally> out;
  for (const auto& n : names) out.push_back({n});
  return out;
}

}  // namespace

bool PostulateReport::ok() const {
  for (const auto* group : {&rational, &answer_set}) {
    for (const auto& t : *group) {
      if (t.failed) return false;
    }
  }
  return true;
}

PostulateReport check_postulates(const PostulateOptions& options) {
  PostulateReport report;
  report.seed = options.seed;
  report.cases = options.cases;
  report.rational = tallies({"REF", "LLE", "RW", "CT", "OR", "RM"});
  report.answer_set = tallies({"REF_DL", "LLE_DL", "RW_DL", "CT_DL", "OR_DL", "RM_DL"});

  for (std::size_t i = 0; i < options.cases; ++i) {
    Case c(case_seed(options.seed, i), options.oracle);
    bool failed = false;
    c.check_rational(report.rational, failed);
    if (!c.check_answer_set(report.answer_set, failed)) ++report.cases_without_answer_set;

    if (failed && !options.dump_dir.empty()) {
      std::filesystem::create_directories(options.dump_dir);
      const auto path = options.dump_dir / ("case-" + std::to_string(c.seed()) + ".kb");
      std::ofstream(path) << "# failing postulate case, seed " << c.seed() << "\n"
                          << serialize_kb(c.kb());
      report.dumped.push_back(path);
    }
  }
  return report;
}

}  // namespace ddl
