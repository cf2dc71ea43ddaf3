#include "gradalg/corpus.hpp"

#include "gradalg/algebra_file.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"

namespace gradalg {

GradedAlgebra self_based(const GradedAlgebra& a) {
  DesignatedBase base;
  for (std::size_t i = 0; i < a.dim(); ++i) base.elements.push_back(a.basis_element(i));
  return a.with_base(std::move(base));
}

GradedAlgebra dual_numbers(const FieldSpec& k, const GradeGroup& g, const GroupElement& d) {
  return GradedAlgebra(k, g, {{"1", g.zero()}, {"x", d}}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0});
}

namespace {

GradeGroup klein() { return GradeGroup(0, {2, 2}); }

// Z2-graded algebra placed in Z2 x Z2 through the first coordinate.
GradedAlgebra first_coordinate(const GradedAlgebra& a) {
  GradeGroup k4 = klein();
  return regrade(a, k4, {k4.element({1, 0})});
}

GradedAlgebra twisted_z2(const FieldSpec& k, const mpq_class& square) {
  GradeGroup z2 = GradeGroup::cyclic(2);
  return twisted_group_algebra(k, Cocycle{z2, {1, 1, 1, square}});
}

// Upper-triangular 3x3 matrices graded by Z2 x Z2.
GradedAlgebra upper_triangular3(const FieldSpec& k) {
  GradeGroup k4 = klein();
  auto full = matrix_shift(ground_field(k, k4), {k4.zero(), k4.element({1, 0}), k4.element({1, 1})});
  std::vector<Element> basis;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) basis.push_back(full.basis_element(matrix_index(3, 1, i, j, 0)));
  return subalgebra(full, basis, "t");
}

}  // namespace

std::vector<CorpusEntry> standard_corpus() {
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f2 = FieldSpec::prime_field(2), f3 = FieldSpec::prime_field(3), f5 = FieldSpec::prime_field(5);
  const GradeGroup k4 = klein(), z2 = GradeGroup::cyclic(2), z = GradeGroup::cyclic(0);
  const GradeGroup triv = GradeGroup::trivial();
  auto hq = quaternion_algebra(q, -1, -1);
  std::vector<CorpusEntry> c = {
      {"H_Q", hq},
      {"H_split_Q", quaternion_algebra(q, 1, 1)},
      {"H_F5", quaternion_algebra(f5, -1, -1)},
      {"H_F3", quaternion_algebra(f3, -1, -1)},
      {"Q_K4", ground_field(q, k4)},
      {"Q[Z2]", group_algebra(q, z2)},
      {"F2[Z2]", group_algebra(f2, z2)},
      {"F3[Z2]", group_algebra(f3, z2)},
      {"F5[Z2]", group_algebra(f5, z2)},
      {"F3[Z2]^a", self_based(twisted_z2(f3, -1))},
      {"M2(Q[Z2])(0,1)", matrix_shift(self_based(group_algebra(q, z2)), {z2.zero(), z2.element({1})})},
      {"M2(F3[Z2])(0,1)", matrix_shift(self_based(group_algebra(f3, z2)), {z2.zero(), z2.element({1})})},
      {"M2(Q)(0,1)", matrix_shift(ground_field(q, z2), {z2.zero(), z2.element({1})})},
      {"M2(Q)", matrix_shift(ground_field(q, triv), {triv.zero(), triv.zero()})},
      {"QxQ", split_product(q, triv)},
      {"UT2_Q", upper_triangular(q, z, z.element({1}))},
      {"Q[S3]", group_algebra(q, FiniteGroup::symmetric(3))},
      {"F3[S3]", group_algebra(f3, FiniteGroup::symmetric(3))},
      {"Q[Q8]", group_algebra(q, FiniteGroup::quaternion8())},
      {"H_Q(x)H_Q", tensor_product(hq, hq)},
  };
  return c;
}

std::vector<CorpusEntry> small_field_corpus(std::uint32_t p) {
  const FieldSpec k = FieldSpec::prime_field(p);
  const GradeGroup k4 = klein();
  const GradeGroup z2 = GradeGroup::cyclic(2);
  std::vector<CorpusEntry> c = {
      {"k", ground_field(k, k4)},
      {"k[Z2]", first_coordinate(group_algebra(k, z2))},
      {"k[Z2xZ2]", group_algebra(k, k4)},
      {"kxk", split_product(k, k4)},
      {"UT2", upper_triangular(k, k4, k4.element({1, 0}))},
      {"M2(k)(0,e1)", matrix_shift(ground_field(k, k4), {k4.zero(), k4.element({1, 0})})},
      {"M2(k)(0,e2)", matrix_shift(ground_field(k, k4), {k4.zero(), k4.element({0, 1})})},
      {"k[x]/x^2", dual_numbers(k, k4, k4.element({0, 1}))},
  };
  if (p == 2) {
    // F4 = F2[x]/(x^2 + x + 1), trivially graded
    c.push_back({"F4", GradedAlgebra(k, k4, {{"1", k4.zero()}, {"x", k4.zero()}},
                                     {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}}, {1, 0})});
  } else {
    c.push_back({"k[Z2]^a", first_coordinate(twisted_z2(k, -1))});
    c.push_back({"H(-1,-1)", quaternion_algebra(k, -1, -1)});
  }
  return c;
}

std::vector<CorpusEntry> small_field_extras(std::uint32_t p) {
  const FieldSpec k = FieldSpec::prime_field(p);
  return {
      {"k[S3]", group_algebra(k, FiniteGroup::symmetric(3))},
      {"k[Z3]", group_algebra(k, FiniteGroup::cyclic(3))},
      {"k[Z4]", group_algebra(k, FiniteGroup::cyclic(4))},
      {"UT3", upper_triangular3(k)},
      {"M2(k)", matrix_shift(ground_field(k, GradeGroup::trivial()), {GradeGroup().zero(), GradeGroup().zero()})},
      {"k[Z2]xk", [&] {
         // k[Z2] x k, Z2-graded with the second factor in degree 0
         GradeGroup z2 = GradeGroup::cyclic(2);
         return GradedAlgebra(k, z2, {{"1", z2.zero()}, {"g", z2.element({1})}, {"e", z2.zero()}},
                              {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 2, 2, 1}}, {1, 0, 1});
       }()},
  };
}

GradedAlgebra corpus_instance(const std::string& name) {
  for (auto& e : standard_corpus())
    if (e.name == name) return e.algebra;
  throw DomainError("no corpus instance named '" + name + "'");
}

}  // namespace gradalg
