#include <doctest.h>

#include <set>

#include "gradalg/algebra_file.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/errors.hpp"

using namespace gradalg;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const GradeGroup K4(0, {2, 2});
const GradeGroup Z2 = GradeGroup::cyclic(2);
}  // namespace

TEST_CASE("finite groups") {
  CHECK(FiniteGroup::symmetric(3).order() == 6);
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK(FiniteGroup::dihedral(6).order() == 12);
  CHECK(FiniteGroup::alternating(4).order() == 12);
  CHECK(FiniteGroup::quaternion8().order() == 8);
  CHECK_FALSE(FiniteGroup::quaternion8().is_abelian());
  CHECK(FiniteGroup::dihedral(2).is_abelian());
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {0, 1}}), DomainError);
  for (const auto& g : small_groups()) CHECK(g.order() <= 12);
}

TEST_CASE("centre and commutator subgroup") {
  auto s3 = group_center_and_commutator(FiniteGroup::symmetric(3));
  CHECK(s3.center.size() == 1);
  CHECK(s3.commutator_order == 3);
  auto q8 = group_center_and_commutator(FiniteGroup::quaternion8());
  CHECK(q8.center.size() == 2);
  CHECK(q8.commutator_order == 2);
  CHECK(q8.center == q8.commutator);
  auto c6 = group_center_and_commutator(FiniteGroup::cyclic(6));
  CHECK(c6.center.size() == 6);
  CHECK(c6.commutator_order == 1);
  auto a4 = group_center_and_commutator(FiniteGroup::alternating(4));
  CHECK(a4.commutator_order == 4);
}

TEST_CASE("abelian structure is an isomorphism") {
  for (const auto& g : small_groups()) {
    if (!g.is_abelian()) continue;
    auto s = abelian_structure(g);
    CHECK(*s.group.order() == g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b) CHECK(s.image[g.mul(a, b)] == s.group.add(s.image[a], s.image[b]));
    std::set<GroupElement> distinct(s.image.begin(), s.image.end());
    CHECK(distinct.size() == g.order());
  }
}

TEST_CASE("group algebras") {
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  CHECK(f2.dim() == 2);
  CHECK(is_graded_field(f2).yes());
  auto qz = group_algebra(Q, Z2);
  CHECK(is_graded_field(qz).yes());
  CHECK(invertible_support(qz).degrees.size() == 2);
  auto qs3 = group_algebra(Q, FiniteGroup::symmetric(3));
  CHECK(qs3.dim() == 6);
  CHECK(qs3.group().rank() == 0);
  CHECK(validate(qs3).ok);
  for (const auto& g : small_groups()) {
    if (!g.is_abelian()) continue;
    auto a = group_algebra(Q, g);
    CHECK(validate(a).ok);
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(inverse_of(a, a.basis_element(i)));
  }
}

TEST_CASE("twisted group algebras") {
  Cocycle trivial{K4, std::vector<mpq_class>(16, 1)};
  CHECK(twisted_group_algebra(Q, trivial).same_table(group_algebra(Q, K4)));
  auto h = twisted_group_algebra(Q, quaternion_cocycle(Q, -1, -1));
  auto hq = quaternion_algebra(Q, -1, -1);
  // element order (0,0),(0,1),(1,0),(1,1) is 1, j, i, k
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      auto a = h.multiply(h.basis_element(perm[x]), h.basis_element(perm[y]));
      auto b = hq.multiply(hq.basis_element(x), hq.basis_element(y));
      for (std::size_t z = 0; z < 4; ++z) CHECK(a[perm[z]] == b[z]);
    }
  auto f9 = twisted_group_algebra(FieldSpec::prime_field(3), Cocycle{Z2, {1, 1, 1, -1}});
  CHECK(is_graded_field(f9).yes());
  GradeGroup t;
  CHECK(is_graded_field(regrade(f9, t, {t.zero()})).yes());
  Cocycle bad{Z2, {1, 1, 1, 0}};
  CHECK_THROWS_AS(twisted_group_algebra(Q, bad), DomainError);
  Cocycle broken{GradeGroup::cyclic(3), {1, 1, 1, 1, 2, 1, 1, 1, 1}};
  CHECK_THROWS_WITH_AS(twisted_group_algebra(Q, broken), doctest::Contains("cocycle identity fails"), DomainError);
  // non-normalized input is rescaled by alpha(0,0)
  Cocycle scaled{Z2, {2, 2, 2, -2}};
  auto n = normalize_cocycle(Q, scaled);
  CHECK(n.values == std::vector<mpq_class>{1, 1, 1, -1});
}

TEST_CASE("twisted algebras validate and are graded division rings") {
  for (std::uint32_t p : {0u, 3u, 5u, 7u}) {
    FieldSpec k = p ? FieldSpec::prime_field(p) : Q;
    for (long a : {-1L, 2L, 3L})
      for (long b : {-1L, 5L}) {
        if (k.normalize(a) == 0 || k.normalize(b) == 0) continue;
        auto alg = twisted_group_algebra(k, quaternion_cocycle(k, a, b));
        CHECK(validate(alg).ok);
        CHECK(is_graded_division_ring(alg).yes());
      }
  }
}

TEST_CASE("quaternion algebras") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(validate(h).ok);
  CHECK(is_graded_division_ring(h).yes());
  auto s = quaternion_algebra(Q, 1, 1);
  auto one_plus_i = h.add(s.unit(), s.basis_element(1));
  auto one_minus_i = s.add(s.unit(), s.scale(-1, s.basis_element(1)));
  CHECK(s.is_zero(s.multiply(one_plus_i, one_minus_i)));
  CHECK(is_graded_central_simple(s).yes());
  auto f5 = quaternion_algebra(FieldSpec::prime_field(5), -1, -1);
  CHECK(is_graded_central_simple(f5).yes());
  CHECK_THROWS_AS(quaternion_algebra(FieldSpec::prime_field(2), 1, 1), UnsupportedError);
  CHECK_THROWS_AS(quaternion_algebra(Q, 0, 1), DomainError);
  for (std::uint32_t p : {0u, 3u, 5u})
    for (long a : {-1L, 2L, -3L})
      for (long b : {-1L, 3L, 7L}) {
        FieldSpec k = p ? FieldSpec::prime_field(p) : Q;
        if (k.normalize(a) == 0 || k.normalize(b) == 0) continue;
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(is_graded_central_simple(quaternion_algebra(k, a, b)).yes());
      }
}

TEST_CASE("regrade checks the homomorphism") {
  auto qz = group_algebra(Q, Z2);
  CHECK_THROWS_AS(regrade(qz, GradeGroup::cyclic(3), {GradeGroup::cyclic(3).element({1})}), DomainError);
  auto r = regrade(qz, K4, {K4.element({1, 0})});
  CHECK(r.degree(1) == K4.element({1, 0}));
}

TEST_CASE("algebra files round trip byte for byte") {
  auto all = standard_corpus();
  for (std::uint32_t p : {2u, 3u})
    for (auto& e : small_field_corpus(p)) all.push_back(e);
  for (const auto& e : all) {
    CAPTURE(e.name);
    std::string text = emit(e.algebra);
    auto back = parse(text);
    CHECK(back.same_table(e.algebra));
    CHECK(emit(back) == text);
    if (!e.algebra.provenance().is_null()) CHECK(reconstruct(e.algebra.provenance()).same_table(e.algebra));
  }
}

TEST_CASE("parse errors name the location") {
  CHECK_THROWS_WITH_AS(parse("{\n \"field\": \"Q\",\n oops }"), doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"field":"Q","grade_group":{"free_rank":0,"torsion":[2]},
    "basis":[{"name":"1","degree":[0]}],"structure":[[0,0,5,1,1]],"unit":[[1,1]]})"),
                       doctest::Contains("structure[0][2]"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"field":"Fp","p":4})"), doctest::Contains("'p'"), ParseError);
}
