#pragma once

#include <string>

#include "gradalg/graded_algebra.hpp"

namespace gradalg {

// JSON documents describing graded algebras:
//   field        "Q" or "Fp" (with "p")
//   grade_group  {"free_rank": f, "torsion": [n1, ...]}
//   basis        [{"name": ..., "degree": [...]}, ...]
//   structure    [[i, j, k, num, den], ...] sorted by (i, j, k)
//   unit         [[num, den], ...]
//   base         optional; entries are basis indices or coefficient arrays
//   provenance   optional construction descriptor

Json field_to_json(const FieldSpec& k);
FieldSpec field_from_name(const std::string& name);  // "Q", "F5", ...

Json group_to_json(const GradeGroup& g);
GradeGroup group_from_json(const Json& j);
GroupElement element_from_json(const GradeGroup& g, const Json& j);

Json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const Json& j);
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, std::size_t dim);

Json to_json(const GradedAlgebra& a);
GradedAlgebra from_json(const Json& j);

// Canonical text form: two-space indented JSON followed by a newline.
std::string emit(const GradedAlgebra& a);
// Throws ParseError naming the line or the offending field.
GradedAlgebra parse(const std::string& text);

GradedAlgebra load_algebra(const std::string& path);
void save_algebra(const GradedAlgebra& a, const std::string& path);

// Rebuilds an algebra from its provenance descriptor.
GradedAlgebra reconstruct(const Json& provenance);

}  // namespace gradalg
