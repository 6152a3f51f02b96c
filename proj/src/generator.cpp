#include "ddl/generator.hpp"

#include <random>
#include <string>
#include <vector>

namespace ddl {

namespace {

// Draws via modulo so that the sequence does not depend on the standard
// library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) { return static_cast<double>(rng_() % 1000000) < p * 1000000.0; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

KnowledgeBase random_kb(std::uint64_t seed, const GeneratorOptions& options) {
  Draw draw(seed);
  KnowledgeBase kb;

  const int n_concepts = 2 + draw.below(options.max_concepts - 1);
  const int n_individuals = 1 + draw.below(options.max_individuals);
  std::vector<Concept> atoms;
  for (int i = 0; i < n_concepts; ++i) {
    const std::string name(1, static_cast<char>('A' + i));
    kb.signature.concepts.insert(name);
    atoms.push_back(Concept::atom(name));
  }
  std::vector<std::string> individuals;
  for (int i = 0; i < n_individuals; ++i) {
    individuals.emplace_back(1, static_cast<char>('a' + i));
    kb.signature.individuals.insert(individuals.back());
  }

  auto literal = [&] {
    const Concept& a = atoms[static_cast<std::size_t>(draw.below(n_concepts))];
    return draw.chance(0.25) ? Concept::negation(a) : a;
  };

  // Definitional links point from later names to earlier ones, so the
  // subsumption hierarchy stays acyclic.
  std::vector<std::pair<int, int>> links;
  for (int sub = 1; sub < n_concepts; ++sub) {
    for (int sup = 0; sup < sub; ++sup) {
      if (!draw.chance(options.link_probability / n_concepts * 2)) continue;
      links.emplace_back(sub, sup);
      kb.add(Axiom::inclusion(atoms[sub], atoms[sup]));
    }
  }
  if (n_concepts >= 3 && draw.chance(options.link_probability)) {
    const int def = draw.below(n_concepts);
    const int x = (def + 1) % n_concepts;
    const int y = (def + 2) % n_concepts;
    kb.add(Axiom::equality(atoms[def], Concept::conjunction({atoms[x], atoms[y]})));
  }
  if (draw.chance(options.link_probability)) {
    const int x = draw.below(n_concepts);
    const int y = draw.below(n_concepts);
    if (x != y) kb.add(Axiom::inclusion(atoms[x], Concept::negation(atoms[y])));
  }

  const int n_defeasible = 1 + draw.below(options.max_defeasible);
  if (!links.empty() && n_defeasible >= 2 && draw.chance(0.6)) {
    const auto [sub, sup] = links[static_cast<std::size_t>(draw.below(static_cast<int>(links.size())))];
    const Concept x = atoms[static_cast<std::size_t>(draw.below(n_concepts))];
    kb.add(DefeasibleAxiom(atoms[sup], x));
    kb.add(DefeasibleAxiom(atoms[sub], Concept::negation(x)));
  }
  for (int guard = 0; static_cast<int>(kb.dbox.size()) < n_defeasible && guard < 50; ++guard) {
    const Concept lhs = draw.chance(0.05) ? Concept::top() : literal();
    const Concept rhs = literal();
    if (lhs == rhs) continue;
    kb.add(DefeasibleAxiom(lhs, rhs));
  }

  for (const auto& ind : individuals) {
    const int facts = draw.below(3);
    for (int k = 0; k < facts; ++k) kb.add(Axiom::inclusion(Concept::nominal(ind), literal()));
  }
  return kb;
}

}  // namespace ddl
