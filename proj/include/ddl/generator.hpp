#pragma once

#include <cstdint>

#include "ddl/knowledge_base.hpp"

namespace ddl {

struct GeneratorOptions {
  int max_concepts = 6;
  int max_individuals = 4;
  int max_defeasible = 5;
  /// Chance of a strict definitional link between two concept names.
  double link_probability = 0.3;
};

/// A small random defeasible knowledge base, a pure function of the seed.
///
/// Concept names are A, B, … and individuals a, b, …; defeasible sides are
/// concept names or their negations. With some probability a
/// specialization pattern (Sub [= Sup, Sup ~[= X, Sub ~[= !X) is planted so
/// that ranks above 0 occur. Individuals receive nominal assertions.
KnowledgeBase random_kb(std::uint64_t seed, const GeneratorOptions& options = {});

}  // namespace ddl
