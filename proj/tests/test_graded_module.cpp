#include <doctest.h>

#include <random>

#include "gradalg/constructions.hpp"
#include "gradalg/corpus.hpp"
#include "gradalg/graded_module.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const GradeGroup Z2 = GradeGroup::cyclic(2);
const GradeGroup K4(0, {2, 2});

GroupElement z2(long x) { return Z2.element({x}); }
GroupElement k4(long a, long b) { return K4.element({a, b}); }

std::vector<std::vector<GroupElement>> tuples(const GradeGroup& g, std::size_t n) {
  std::vector<std::vector<GroupElement>> out{{}};
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::vector<GroupElement>> next;
    for (const auto& prefix : out)
      for (const auto& x : g.elements()) {
        auto v = prefix;
        v.push_back(x);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("pattern check examples") {
  auto q = ground_field(Q, Z2);
  CHECK(pattern_check(q, PatternMatrix::identity(q, {z2(0), z2(1)})));
  auto id = PatternMatrix::identity(q, {z2(0), z2(1)});
  id.col_shifts = {z2(0), z2(0)};
  CHECK_FALSE(pattern_check(q, id));
  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  auto m = PatternMatrix::zero(f2, {z2(1), z2(1)}, {z2(0), z2(0)});
  m.at(0, 0) = f2.basis_element(1);
  m.at(1, 1) = f2.basis_element(1);
  CHECK(pattern_check(f2, m));
}

TEST_CASE("pattern check is invariant under translating all shifts") {
  std::mt19937 rng(3);
  auto h = quaternion_algebra(Q, -1, -1);
  auto elems = K4.elements();
  for (int t = 0; t < 200; ++t) {
    std::vector<GroupElement> d, al;
    for (int i = 0; i < 2; ++i) d.push_back(elems[rng() % 4]);
    for (int j = 0; j < 2; ++j) al.push_back(elems[rng() % 4]);
    auto m = PatternMatrix::zero(h, d, al);
    for (auto& e : m.entries) {
      std::size_t b = rng() % 4;
      if (rng() % 3) e = h.basis_element(b);
    }
    const bool base = pattern_check(h, m);
    for (const auto& shift : elems) {
      auto moved = m;
      for (auto& x : moved.row_shifts) x = K4.add(x, shift);
      for (auto& x : moved.col_shifts) x = K4.add(x, shift);
      CHECK(pattern_check(h, moved) == base);
    }
  }
}

TEST_CASE("shift isomorphism examples") {
  auto f5 = group_algebra(FieldSpec::prime_field(5), Z2);
  auto r = is_shift_iso(f5, {z2(0), z2(1)}, {z2(0), z2(0)});
  CHECK(r.truth == Truth::yes);
  CHECK(r.tier == "matching");
  REQUIRE(r.witness);
  CHECK(verify_shift_witness(f5, *r.witness).truth == Truth::yes);
  CHECK(exhaustive_shift_iso(f5, {z2(0), z2(1)}, {z2(0), z2(0)}).truth == Truth::yes);

  auto q = ground_field(Q, Z2);
  auto f = is_shift_iso(q, {z2(0), z2(1)}, {z2(0), z2(0)});
  CHECK(f.truth == Truth::no);
  CHECK(f.tier == "matching");

  auto h = quaternion_algebra(Q, -1, -1);
  auto same = is_shift_iso(h, {k4(1, 0), k4(0, 1)}, {k4(1, 0), k4(0, 1)});
  CHECK(same.truth == Truth::yes);
  CHECK(same.witness->entries == PatternMatrix::identity(h, {k4(1, 0), k4(0, 1)}).entries);
  CHECK(is_shift_iso(h, {k4(0, 0)}, {k4(0, 0), k4(0, 0)}).truth == Truth::no);
}

TEST_CASE("shift isomorphism beyond division rings") {
  // F2 x F2 in degree 0 with Z2 shifts: exhaustive tier
  auto kk = split_product(FieldSpec::prime_field(2), Z2);
  auto r = is_shift_iso(kk, {z2(1)}, {z2(0)});
  CHECK(r.tier == "exhaustive");
  CHECK(r.truth == Truth::no);
  // Q x Q over Q: no tier applies
  auto qq = split_product(Q, Z2);
  CHECK(is_shift_iso(qq, {z2(1)}, {z2(0)}).truth == Truth::undetermined);
  // witnesses are checked on their own
  auto w = PatternMatrix::identity(qq, {z2(0)});
  CHECK(verify_shift_witness(qq, w).truth == Truth::yes);
  auto bad = PatternMatrix::zero(qq, {z2(0)}, {z2(0)});
  bad.at(0, 0) = qq.basis_element(0);
  CHECK(verify_shift_witness(qq, bad).truth == Truth::undetermined);
}

TEST_CASE("gamma star membership examples") {
  auto q4 = ground_field(Q, K4);
  CHECK(gamma_star_membership(q4, {k4(0, 0), k4(0, 0)}).truth == Truth::yes);
  CHECK(gamma_star_membership(q4, {k4(0, 0), k4(1, 0), k4(0, 1), k4(1, 1)}).truth == Truth::no);
  auto qz = group_algebra(Q, Z2);
  CHECK(gamma_star_membership(qz, {z2(0), z2(1), z2(1), z2(0)}).truth == Truth::yes);
  auto h = quaternion_algebra(Q, -1, -1);
  CHECK(gamma_star_membership(h, {k4(0, 0), k4(1, 0), k4(0, 1), k4(1, 1)}).truth == Truth::yes);
}

TEST_CASE("matching verdicts agree with exhaustive search over Z2 shifts") {
  std::vector<GradedAlgebra> algs = {group_algebra(FieldSpec::prime_field(2), Z2),
                                     ground_field(FieldSpec::prime_field(3), Z2),
                                     group_algebra(FieldSpec::prime_field(5), Z2)};
  std::size_t instances = 0;
  for (const auto& a : algs)
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& d : tuples(Z2, n))
        for (const auto& al : tuples(Z2, n)) {
          auto v = is_shift_iso(a, d, al);
          REQUIRE(v.determined());
          CHECK((v.tier == "matching" || v.tier == "permutation"));
          CHECK(v.yes() == exhaustive_shift_iso(a, d, al).yes());
          CHECK(v.yes() == oracle::invertible_pattern_exists(a, d, al));
          ++instances;
        }
  CHECK(instances >= 48);
}

TEST_CASE("exhaustive tier agrees with the pair-search oracle") {
  std::vector<GradedAlgebra> algs = {split_product(FieldSpec::prime_field(2), Z2),
                                     upper_triangular(FieldSpec::prime_field(2), Z2, z2(1)),
                                     dual_numbers(FieldSpec::prime_field(2), Z2, z2(1)),
                                     matrix_shift(ground_field(FieldSpec::prime_field(2), Z2), {z2(0), z2(1)})};
  for (const auto& a : algs)
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& d : tuples(Z2, n))
        for (const auto& al : tuples(Z2, n)) {
          auto v = is_shift_iso(a, d, al);
          REQUIRE(v.determined());
          CHECK(v.yes() == oracle::invertible_pattern_exists(a, d, al));
        }
}

TEST_CASE("extending homogeneous bases") {
  auto q1 = ground_field(Q, GradeGroup::trivial());
  GradeGroup t;
  auto b = extend_homogeneous_basis(q1, {t.zero()}, {});
  REQUIRE(b.vectors.size() == 1);
  CHECK(b.vectors[0] == ModuleVector{q1.unit()});

  auto e = extend_homogeneous_basis(q1, {t.zero(), t.zero()}, {{q1.unit(), q1.unit()}});
  REQUIRE(e.vectors.size() == 2);
  CHECK(e.vectors[1] == ModuleVector{q1.zero(), q1.unit()});

  auto f2 = group_algebra(FieldSpec::prime_field(2), Z2);
  auto g = extend_homogeneous_basis(f2, {z2(0), z2(1)}, {{f2.basis_element(1), f2.zero()}});
  CHECK(g.vectors.size() == 2);
  CHECK(g.degrees[0] == z2(1));

  try {
    extend_homogeneous_basis(q1, {t.zero(), t.zero()},
                             {{q1.unit(), q1.zero()}, {q1.scale(2, q1.unit()), q1.zero()}});
    FAIL("dependent input accepted");
  } catch (const DependencyError& err) {
    CHECK(err.certificate()["index"] == 1);
  }
  CHECK_THROWS_AS(extend_homogeneous_basis(split_product(Q, t), {t.zero()}, {}), HypothesisError);
}

TEST_CASE("extended bases are homogeneous, independent and spanning") {
  std::mt19937 rng(5);
  std::vector<GradedAlgebra> ds = {quaternion_algebra(Q, -1, -1), group_algebra(Q, K4), ground_field(Q, K4),
                                   group_algebra(FieldSpec::prime_field(3), K4)};
  auto elems = K4.elements();
  for (const auto& d : ds) {
    auto comps = d.components();
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t m = 1 + rng() % 3;
      std::vector<GroupElement> shifts;
      for (std::size_t j = 0; j < m; ++j) shifts.push_back(elems[rng() % 4]);
      ShiftedFreeModule mod{d, shifts};
      // a random homogeneous vector of a random degree
      std::vector<ModuleVector> input;
      const std::size_t want = rng() % (m + 1);
      for (std::size_t k = 0; k < want; ++k) {
        auto gamma = elems[rng() % 4];
        ModuleVector v(m, d.zero());
        for (std::size_t j = 0; j < m; ++j) {
          auto it = comps.find(K4.add(gamma, shifts[j]));
          if (it == comps.end() || rng() % 2) continue;
          v[j] = d.scale(1 + rng() % 2, d.basis_element(it->second[rng() % it->second.size()]));
        }
        input.push_back(v);
      }
      HomogeneousBasis b;
      try {
        b = extend_homogeneous_basis(d, shifts, input);
      } catch (const DependencyError&) {
        continue;
      }
      CHECK(b.vectors.size() == m);
      for (std::size_t k = 0; k < b.vectors.size(); ++k) CHECK(mod.homogeneous_degree(b.vectors[k]) == b.degrees[k]);
      if (d.field().is_rational()) {
        auto f = dimension_formula_check(d, shifts, b.vectors);
        CHECK(f.dim_submodule == m);
        continue;
      }
      auto o = oracle::from(d);
      std::vector<oracle::Vec> flat;
      for (const auto& v : b.vectors)
        for (std::size_t t = 0; t < d.dim(); ++t) {
          oracle::Vec w;
          for (const auto& c : v) {
            auto x = oracle::mul(o, oracle::basis(o, t), oracle::from_element(o, c));
            w.insert(w.end(), x.begin(), x.end());
          }
          flat.push_back(w);
        }
      CHECK(oracle::span_of(o.p, flat).dim() == m * d.dim());
    }
  }
}

TEST_CASE("dimension formula") {
  GradeGroup t;
  auto q1 = ground_field(Q, t);
  std::vector<GroupElement> s2 = {t.zero(), t.zero()};
  auto none = dimension_formula_check(q1, s2, {});
  CHECK(none.holds);
  CHECK(none.dim_submodule == 0);
  CHECK(none.dim_quotient == 2);
  auto all = dimension_formula_check(q1, s2, {{q1.unit(), q1.zero()}, {q1.zero(), q1.unit()}});
  CHECK(all.holds);
  CHECK(all.dim_quotient == 0);
  auto one = dimension_formula_check(q1, s2, {{q1.unit(), q1.zero()}, {q1.scale(3, q1.unit()), q1.zero()}});
  CHECK(one.holds);
  CHECK(one.dim_submodule == 1);
  CHECK(one.dim_quotient == 1);
  auto h = quaternion_algebra(Q, -1, -1);
  std::vector<GroupElement> s3 = {k4(0, 0), k4(1, 0), k4(1, 1)};
  auto hn = dimension_formula_check(h, s3, {{h.basis_element(1), h.basis_element(0), h.zero()}});
  CHECK(hn.holds);
  CHECK(hn.dim_submodule == 1);
  CHECK(hn.dim_quotient == 2);
}

TEST_CASE("Morita identities examples") {
  GradeGroup t;
  auto q = ground_field(Q, t);
  auto r = verify_morita_identities(q, {t.zero()});
  CHECK(r.ok());
  CHECK(r.dim_qp == 1);
  auto f3 = group_algebra(FieldSpec::prime_field(3), Z2);
  auto r2 = verify_morita_identities(f3, {z2(0), z2(1)});
  CHECK(r2.ok());
  CHECK(r2.dim_qp == 2);
  CHECK(r2.dim_pq == 8);
  auto h = quaternion_algebra(Q, -1, -1);
  auto r3 = verify_morita_identities(h, {k4(0, 0), k4(1, 1)});
  CHECK(r3.ok());
  CHECK(r3.dim_qp == 4);
  CHECK(r3.dim_pq == 16);
}

TEST_CASE("Morita identities over corpus algebras") {
  std::vector<GradedAlgebra> algs = {ground_field(Q, K4), quaternion_algebra(Q, -1, -1), group_algebra(Q, K4),
                                     upper_triangular(Q, K4, k4(1, 0)), split_product(FieldSpec::prime_field(2), K4),
                                     dual_numbers(FieldSpec::prime_field(3), K4, k4(0, 1))};
  std::mt19937 rng(17);
  auto elems = K4.elements();
  for (const auto& a : algs)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 2; ++trial) {
        std::vector<GroupElement> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(elems[rng() % 4]);
        auto r = verify_morita_identities(a, d);
        CHECK(r.ok());
        CHECK(r.dim_qp == a.dim());
        CHECK(r.dim_pq == n * n * a.dim());
      }
}
