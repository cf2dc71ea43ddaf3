#include <doctest.h>

#include <random>

#include "gradalg/algebra_file.hpp"
#include "gradalg/constructions.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded_algebra.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const GradeGroup K4(0, {2, 2});
const GradeGroup Z2 = GradeGroup::cyclic(2);

GroupElement k4(long a, long b) { return K4.element({a, b}); }

Element vec(std::initializer_list<long> xs) {
  Element e;
  for (long x : xs) e.push_back(x);
  return e;
}

std::size_t span_dim(const GradedAlgebra& a, const std::vector<Element>& vs) {
  auto o = oracle::from(a);
  std::vector<oracle::Vec> rows;
  for (const auto& v : vs) rows.push_back(oracle::from_element(o, v));
  return oracle::span_of(o.p, rows).dim();
}

}  // namespace

TEST_CASE("validate: quaternions and a broken grading") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(validate(h).ok);
  auto basis = h.basis();
  basis[3].degree = k4(0, 0);
  GradedAlgebra bad(Q, K4, basis, h.table(), h.unit());
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "grading-closure");
  REQUIRE(r.triple);
  CHECK(*r.triple == std::array<std::size_t, 3>{1, 2, 3});
  CHECK(validate(ground_field(Q, K4)).ok);
}

TEST_CASE("validate rejects broken associativity and units") {
  GradeGroup t;
  // associative (b0 idempotent, b1 annihilates everything) but b0 is no unit
  GradedAlgebra a(Q, t, {{"1", t.zero()}, {"x", t.zero()}}, {{0, 0, 0, 1}}, {1, 0});
  auto r = validate(a);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "unit");
  GradedAlgebra na(Q, t, {{"1", t.zero()}, {"x", t.zero()}}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}}, {1, 0});
  CHECK(validate(na).violation == "associativity");
  GradedAlgebra z(Q, t, {{"1", t.zero()}}, {}, {0});
  CHECK_FALSE(validate(z).ok);
}

TEST_CASE("support and invertible support") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(support(h).size() == 4);
  CHECK(invertible_support(h).degrees.size() == 4);
  auto q = ground_field(Q, K4);
  CHECK(support(q) == std::vector<GroupElement>{k4(0, 0)});
  CHECK(invertible_support(q).degrees == std::vector<GroupElement>{k4(0, 0)});
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  CHECK(support(f2).size() == 2);
  CHECK(invertible_support(f2).degrees.size() == 2);
  // Upper-triangular: degree 1 holds only the nilpotent E12
  auto ut = upper_triangular(Q, GradeGroup::cyclic(0), GradeGroup::cyclic(0).element({1}));
  auto s = invertible_support(ut);
  CHECK(s.degrees.size() == 1);
  CHECK(s.status == Truth::yes);
}

TEST_CASE("invertible support over Q with a two-dimensional component uses the grid") {
  // M2(Q)(0,1) graded by Z2: the degree-1 component is span{E12, E21}, which contains E12 + E21.
  auto m = matrix_shift(ground_field(Q, Z2), {Z2.zero(), Z2.element({1})});
  auto s = invertible_support(m);
  CHECK(s.status == Truth::yes);
  CHECK(s.degrees.size() == 2);
  for (const auto& [deg, w] : s.witnesses) CHECK(m.multiply(w.first, w.second) == m.unit());
}

TEST_CASE("graded ideal closure examples") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(graded_ideal_closure(h, {h.unit()}).dim() == 4);
  CHECK(graded_ideal_closure(h, {h.basis_element(1)}).dim() == 4);
  GradeGroup z = GradeGroup::cyclic(0);
  auto ut = upper_triangular(Q, z, z.element({1}));
  auto i = graded_ideal_closure(ut, {ut.basis_element(1)});
  CHECK(i.dim() == 1);
  CHECK(i.degrees[0] == z.element({1}));
  CHECK_THROWS_AS(graded_ideal_closure(h, {vec({1, 1, 0, 0})}), DomainError);
}

TEST_CASE("centres") {
  auto h = quaternion_algebra(Q, -1, -1);
  auto zh = center(h);
  CHECK(zh.dim() == 1);
  CHECK(zh.degrees[0] == k4(0, 0));
  GradeGroup t;
  auto m2 = matrix_shift(ground_field(Q, t), {t.zero(), t.zero()});
  auto zm = center(m2);
  REQUIRE(zm.dim() == 1);
  CHECK(zm.basis[0] == vec({1, 0, 0, 1}));
  CHECK(center(group_algebra(Q, Z2)).dim() == 2);
}

TEST_CASE("Jacobson radical examples") {
  GradeGroup t;
  CHECK(jacobson_radical(matrix_shift(ground_field(Q, t), {t.zero(), t.zero()})).dim() == 0);
  GradeGroup z = GradeGroup::cyclic(0);
  auto ut = upper_triangular(Q, z, z.element({1}));
  auto j = jacobson_radical(ut);
  REQUIRE(j.dim() == 1);
  CHECK(j.basis[0] == vec({0, 1, 0}));
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  auto jf = jacobson_radical(f2);
  REQUIRE(jf.dim() == 1);
  CHECK(jf.basis[0] == vec({1, 1}));
}

TEST_CASE("graded radical part examples") {
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  CHECK(graded_radical_part(f2).dim() == 0);
  GradeGroup z = GradeGroup::cyclic(0);
  auto ut = upper_triangular(Q, z, z.element({1}));
  auto r = graded_radical_part(ut);
  REQUIRE(r.dim() == 1);
  CHECK(r.degrees[0] == z.element({1}));
  CHECK(graded_radical_part(quaternion_algebra(Q, -1, -1)).dim() == 0);
}

TEST_CASE("graded simplicity examples") {
  CHECK(is_graded_simple(quaternion_algebra(Q, -1, -1)).yes());
  CHECK(is_graded_simple(group_algebra(Q, Z2)).yes());
  auto qq = split_product(Q, GradeGroup::trivial());
  auto v = is_graded_simple(qq);
  CHECK(v.no());
  CHECK(v.certificate["kind"] == "proper-graded-ideal");
  CHECK(is_graded_simple(quaternion_algebra(Q, 1, 1)).yes());
}

TEST_CASE("graded division rings and fields") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(is_graded_division_ring(h).yes());
  CHECK(is_graded_field(h).no());
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  CHECK(is_graded_division_ring(f2).yes());
  CHECK(is_graded_field(f2).yes());
  GradeGroup t;
  auto m2 = matrix_shift(ground_field(Q, t), {t.zero(), t.zero()});
  auto v = is_graded_division_ring(m2);
  CHECK(v.no());
  CHECK(v.certificate["kind"] == "zero-divisor");
  CHECK(is_graded_field(group_algebra(Q, Z2)).yes());
  // Q[Z3] trivially graded is Q x Q(w): commutative, not a field
  auto qz3 = group_algebra(Q, FiniteGroup::symmetric(3));
  CHECK(is_graded_division_ring(qz3).no());
  // F9 as a trivially graded field
  auto f9 = regrade(twisted_group_algebra(FieldSpec::prime_field(3), Cocycle{Z2, {1, 1, 1, -1}}), t, {t.zero()});
  CHECK(is_graded_field(f9).yes());
  // Q(i) trivially graded: a field found by its minimal polynomial
  auto qi = regrade(twisted_group_algebra(Q, Cocycle{Z2, {1, 1, 1, -1}}), t, {t.zero()});
  auto vf = is_graded_field(qi);
  CHECK(vf.yes());
  // Split quaternions over F5, trivially graded: noncommutative finite, hence not division
  auto h5 = regrade(quaternion_algebra(FieldSpec::prime_field(5), -1, -1), t, {t.zero(), t.zero()});
  CHECK(is_graded_division_ring(h5).no());
  // H_Q trivially graded: no zero divisor on the grid, anisotropy undecided
  auto ht = regrade(h, t, {t.zero(), t.zero()});
  CHECK(is_graded_division_ring(ht).truth == Truth::undetermined);
}

TEST_CASE("graded central simple examples") {
  CHECK(is_graded_central_simple(quaternion_algebra(Q, -1, -1)).yes());
  auto v = is_graded_central_simple(group_algebra(Q, Z2));
  CHECK(v.no());
  CHECK(v.certificate["kind"] == "centre-exceeds-base");
  auto m = corpus_instance("M2(Q[Z2])(0,1)");
  CHECK(is_graded_central_simple(m).yes());
  CHECK(is_graded_central_simple(quaternion_algebra(FieldSpec::prime_field(5), -1, -1)).yes());
  CHECK(is_graded_central_simple(quaternion_algebra(Q, 1, 1)).yes());
}

TEST_CASE("tensor products") {
  auto h = quaternion_algebra(Q, -1, -1);
  auto k = ground_field(Q, K4);
  auto hk = tensor_product(h, k);
  CHECK(hk.same_table(h));
  auto hh = tensor_product(h, h);
  CHECK(hh.dim() == 16);
  CHECK(validate(hh).ok);
  CHECK(is_graded_simple(hh).yes());
  CHECK(center(hh).dim() == 1);
  auto qz = group_algebra(Q, Z2);
  auto qq = tensor_product(qz, qz);
  CHECK(qq.dim() == 4);
  CHECK(support(qq).size() == 2);
  CHECK_THROWS_AS(tensor_product(h, qz), StructuralError);
}

TEST_CASE("tensor product over a base") {
  auto r = self_based(group_algebra(Q, Z2));
  auto m = matrix_shift(r, {Z2.zero(), Z2.element({1})});
  auto t = tensor_product_over_base(m, r);
  CHECK(t.dim() == m.dim());
  CHECK(validate(t).ok);
  auto mm = tensor_product_over_base(m, m);
  CHECK(mm.dim() == 32);
  CHECK(validate(mm).ok);
  CHECK(is_graded_central_simple(mm).yes());
}

TEST_CASE("opposite algebras") {
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(opposite(opposite(h)).same_table(h));
  auto qz = group_algebra(Q, Z2);
  CHECK(opposite(qz).same_table(qz));
  auto op = opposite(h);
  CHECK(op.multiply(op.basis_element(1), op.basis_element(2)) == vec({0, 0, 0, -1}));
}

TEST_CASE("matrix shifts") {
  auto m = matrix_shift(ground_field(Q, Z2), {Z2.zero(), Z2.element({1})});
  CHECK(m.degree(matrix_index(2, 1, 0, 1, 0)) == Z2.element({1}));
  CHECK(m.degree(matrix_index(2, 1, 1, 0, 0)) == Z2.element({1}));
  CHECK(m.degree(matrix_index(2, 1, 0, 0, 0)) == Z2.zero());
  CHECK(m.basis()[1].name == "E12");
  auto h = quaternion_algebra(Q, -1, -1);
  auto plain = matrix_shift(h, {K4.zero(), K4.zero(), K4.zero()});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t x = 0; x < 4; ++x) CHECK(plain.degree(matrix_index(3, 4, i, j, x)) == h.degree(x));
  CHECK_THROWS_AS(matrix_shift(h, {Z2.zero()}), StructuralError);
}

TEST_CASE("matrix shift components follow the entry pattern") {
  std::vector<GradedAlgebra> algs = {quaternion_algebra(Q, -1, -1), group_algebra(Q, K4), ground_field(Q, K4)};
  auto elems = K4.elements();
  for (const auto& a : algs)
    for (const auto& d1 : elems)
      for (const auto& d2 : elems) {
        auto m = matrix_shift(a, {d1, d2});
        CHECK(validate(m).ok);
        std::vector<GroupElement> d = {d1, d2};
        for (const auto& eps : elems) {
          std::size_t expected = 0;
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
              auto target = K4.add(eps, K4.sub(d[i], d[j]));
              for (std::size_t x = 0; x < a.dim(); ++x)
                if (a.degree(x) == target) ++expected;
            }
          std::size_t got = 0;
          for (std::size_t b = 0; b < m.dim(); ++b)
            if (m.degree(b) == eps) ++got;
          CHECK(got == expected);
        }
      }
}

TEST_CASE("homogeneous products land in the sum of degrees") {
  std::mt19937 rng(7);
  for (const auto& e : standard_corpus()) {
    const auto& a = e.algebra;
    auto comps = a.components();
    std::vector<std::pair<GroupElement, std::vector<std::size_t>>> cs(comps.begin(), comps.end());
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& [g1, i1] = cs[rng() % cs.size()];
      const auto& [g2, i2] = cs[rng() % cs.size()];
      Element x = a.zero(), y = a.zero();
      for (auto i : i1) x[i] = coef(rng);
      for (auto i : i2) y[i] = coef(rng);
      x = a.normalize(x);
      y = a.normalize(y);
      auto xy = a.multiply(x, y);
      if (a.is_zero(xy)) continue;
      auto d = a.homogeneous_degree(xy);
      REQUIRE(d);
      CHECK(*d == a.group().add(g1, g2));
    }
  }
}

TEST_CASE("homogeneous decomposition re-sums to the element") {
  std::mt19937 rng(11);
  auto h = quaternion_algebra(Q, -1, -1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < 50; ++t) {
    Element x = vec({coef(rng), coef(rng), coef(rng), coef(rng)});
    Element sum = h.zero();
    for (const auto& [deg, part] : h.homogeneous_parts(x)) {
      CHECK(h.homogeneous_degree(part) == deg);
      sum = h.add(sum, part);
    }
    CHECK(sum == h.normalize(x));
  }
}

TEST_CASE("ideal closure is a graded two-sided ideal") {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& e : small_field_corpus(p)) {
      const auto& a = e.algebra;
      for (const auto& [deg, idx] : a.components()) {
        auto i = graded_ideal_closure(a, {a.basis_element(idx.back())});
        for (std::size_t t = 0; t < i.dim(); ++t) CHECK(a.homogeneous_degree(i.basis[t]) == i.degrees[t]);
        for (std::size_t t = 0; t < i.dim(); ++t)
          for (std::size_t b = 0; b < a.dim(); ++b) {
            auto both = i.basis;
            both.push_back(a.multiply(a.basis_element(b), i.basis[t]));
            both.push_back(a.multiply(i.basis[t], a.basis_element(b)));
            CHECK(span_dim(a, both) == i.dim());
          }
      }
    }
}

TEST_CASE("graded simplicity and the radical agree with exhaustive oracles") {
  for (std::uint32_t p : {2u, 3u}) {
    auto all = small_field_corpus(p);
    for (auto& e : small_field_extras(p)) all.push_back(e);
    for (const auto& e : all) {
      CAPTURE(e.name);
      CAPTURE(p);
      auto o = oracle::from(e.algebra);
      auto v = is_graded_simple(e.algebra);
      REQUIRE(v.determined());
      CHECK(v.yes() == oracle::graded_simple(o));
      auto j = jacobson_radical(e.algebra);
      auto oj = oracle::radical_elements(o);
      std::size_t expected = 1;
      for (std::size_t t = 0; t < j.dim(); ++t) expected *= p;
      CHECK(oj.size() == expected);
      auto span = oracle::span_of(o.p, oj);
      for (const auto& b : j.basis) CHECK(span.contains(oracle::from_element(o, b)));
    }
  }
}

TEST_CASE("centre agrees with enumeration") {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& e : small_field_corpus(p)) {
      CAPTURE(e.name);
      auto o = oracle::from(e.algebra);
      auto z = center(e.algebra);
      auto oz = oracle::centre_elements(o);
      std::size_t expected = 1;
      for (std::size_t t = 0; t < z.dim(); ++t) expected *= p;
      CHECK(oz.size() == expected);
      auto span = oracle::span_of(o.p, oz);
      for (const auto& b : z.basis) CHECK(span.contains(oracle::from_element(o, b)));
    }
}

TEST_CASE("subalgebras, quotients and the degree-zero part") {
  auto h = quaternion_algebra(Q, -1, -1);
  auto h0 = degree_zero_part(h);
  CHECK(h0.dim() == 1);
  GradeGroup z = GradeGroup::cyclic(0);
  auto ut = upper_triangular(Q, z, z.element({1}));
  auto qt = quotient_algebra(ut, jacobson_radical(ut).basis, true);
  CHECK(qt.dim() == 2);
  CHECK(validate(qt).ok);
  CHECK(jacobson_radical(qt).dim() == 0);
  auto sub = subalgebra(h, {h.unit(), h.basis_element(1)});
  CHECK(sub.dim() == 2);
  CHECK(validate(sub).ok);
  CHECK_THROWS_AS(subalgebra(h, {h.unit(), h.basis_element(1), h.basis_element(2)}), DomainError);
}

TEST_CASE("primitive idempotents of centres") {
  auto qs3 = group_algebra(Q, FiniteGroup::symmetric(3));
  auto z = center(qs3);
  auto idem = primitive_idempotents(qs3, z.basis);
  CHECK(idem.size() == 3);
  Element sum = qs3.zero();
  for (const auto& e : idem) {
    CHECK(qs3.multiply(e, e) == e);
    sum = qs3.add(sum, e);
  }
  CHECK(sum == qs3.unit());
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j) CHECK(qs3.is_zero(qs3.multiply(idem[i], idem[j])));
}
