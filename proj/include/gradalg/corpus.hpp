#pragma once

#include <string>
#include <vector>

#include "gradalg/graded_algebra.hpp"

namespace gradalg {

struct CorpusEntry {
  std::string name;
  GradedAlgebra algebra;
};

// The same algebra with its whole underlying space designated as base.
GradedAlgebra self_based(const GradedAlgebra& a);

// k[x]/(x^2) with x homogeneous of degree d.
GradedAlgebra dual_numbers(const FieldSpec& k, const GradeGroup& g, const GroupElement& d);

// Named instances over Q and small prime fields used by the corpus runner.
std::vector<CorpusEntry> standard_corpus();

// Z2 x Z2-graded algebras of dimension <= 4 over F_p (p = 2 or 3), small
// enough for exhaustive searches over all pairs of tensor factors.
std::vector<CorpusEntry> small_field_corpus(std::uint32_t p);

// Additional algebras of dimension <= 6 over F_p for single-algebra oracles.
std::vector<CorpusEntry> small_field_extras(std::uint32_t p);

// Looks an instance up by name in standard_corpus(); throws DomainError if absent.
GradedAlgebra corpus_instance(const std::string& name);

}  // namespace gradalg
