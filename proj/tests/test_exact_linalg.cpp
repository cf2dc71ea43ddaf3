#include <doctest.h>

#include <random>

#include "gradalg/int_matrix.hpp"
#include "gradalg/matrix.hpp"
#include "gradalg/polynomial.hpp"

using namespace gradalg;

namespace {

Matrix<Rationals> qmat(std::vector<std::vector<long>> rows) {
  Rationals Q;
  std::vector<std::vector<mpq_class>> r;
  for (auto& row : rows) r.emplace_back(row.begin(), row.end());
  return Matrix<Rationals>::from_rows(Q, rows.empty() ? 0 : rows[0].size(), r);
}

Poly<PrimeField> fp_poly(std::uint64_t p, std::vector<std::uint64_t> c) { return Poly<PrimeField>(PrimeField{p}, c); }

Poly<Rationals> q_poly(std::vector<long> c) {
  return Poly<Rationals>(Rationals{}, std::vector<mpq_class>(c.begin(), c.end()));
}

bool has_root_fp(const Poly<PrimeField>& f) {
  for (std::uint64_t x = 0; x < f.field().p; ++x)
    if (f.evaluate(x) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("rank, kernel, inverse examples") {
  PrimeField F2{2};
  auto m = Matrix<PrimeField>::from_rows(F2, 2, {{1, 1}, {1, 1}});
  CHECK(rank(m) == 1);

  Rationals Q;
  auto id = Matrix<Rationals>::identity(Q, 3);
  CHECK(inverse(id) == id);

  auto k = kernel_basis(qmat({{1, 2}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][1] != 0);
  CHECK(k[0][0] / k[0][1] == -2);
}

TEST_CASE("singular inverse names a dependent column") {
  auto m = qmat({{1, 2, 3}, {2, 4, 7}, {0, 0, 1}});
  try {
    (void)inverse(m);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.witness_column() == 1);
  }
}

TEST_CASE("random matrices: inverse and rank-nullity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix<Rationals> m(Rationals{}, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    CHECK(rank(m) + kernel_basis(m).size() == c);
    for (const auto& v : kernel_basis(m)) {
      auto w = m.apply(v);
      for (auto& x : w) CHECK(x == 0);
    }
    if (r == c && rank(m) == r) CHECK(m * inverse(m) == Matrix<Rationals>::identity(Rationals{}, r));
  }
  PrimeField F{7};
  for (int trial = 0; trial < 40; ++trial) {
    Matrix<PrimeField> m(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = F.from_int(d(rng));
    CHECK(rank(m) + kernel_basis(m).size() == 3);
    if (rank(m) == 3) CHECK(m * inverse(m) == Matrix<PrimeField>::identity(F, 3));
  }
}

TEST_CASE("solve and determinant") {
  auto m = qmat({{2, 1}, {1, 3}});
  CHECK(determinant(m) == 5);
  auto x = solve(m, {mpq_class(3), mpq_class(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(qmat({{1, 1}, {1, 1}}), {mpq_class(1), mpq_class(2)}));
}

TEST_CASE("echelon basis coordinates") {
  Rationals Q;
  EchelonBasis<Rationals> b(Q, 3, true);
  CHECK(b.insert({1, 1, 0}));
  CHECK(b.insert({0, 1, 1}));
  CHECK_FALSE(b.insert({1, 2, 1}));
  auto dep = b.last_dependency();
  CHECK(dep[0] == 1);
  CHECK(dep[1] == 1);
  auto c = b.coordinates({2, 3, 1});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(b.coordinates({1, 0, 0}));
}

namespace {

void check_smith(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
    CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 6);

  CHECK(smith_normal_form(IntMatrix(2, 3)).invariant_factors.empty());

  auto row = IntMatrix::from_rows({{1, 1, 1, 1}}, 4);
  auto r = smith_normal_form(row);
  REQUIRE(r.invariant_factors.size() == 1);
  CHECK(r.invariant_factors[0] == 1);
  CHECK(integer_kernel(row).cols() == 3);
}

TEST_CASE("Smith normal form on random integer matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    check_smith(m);
    auto k = integer_kernel(m);
    CHECK((m * k).is_zero());
  }
}

TEST_CASE("lattice coordinates") {
  auto basis = IntMatrix::from_rows({{2, 0}, {0, 3}}, 2);
  auto x = lattice_coordinates(basis, {4, 9});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(lattice_coordinates(basis, {1, 0}));
}

TEST_CASE("factor over F_p examples") {
  auto f = fp_poly(5, {1, 0, 1});
  auto fac = factor(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.expand(f.field()) == f);
  std::vector<std::uint64_t> roots;
  for (auto& [g, m] : fac.factors) {
    CHECK(g.degree() == 1);
    CHECK(m == 1);
    roots.push_back(g.field().neg(g.coeff(0)));
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("factor over F_p: products and irreducibility on random inputs") {
  std::mt19937 rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 97ULL}) {
    PrimeField F{p};
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::uint64_t> c(2 + trial % 8);
      for (auto& x : c) x = coef(rng);
      c.back() = 1 + coef(rng) % (p - 1);
      Poly<PrimeField> f(F, c);
      f = f * f.monic().derivative().monic() * f;  // force repeated factors
      if (f.is_zero()) continue;
      auto fac = factor(f);
      CHECK(fac.expand(F) == f);
      for (auto& [g, m] : fac.factors)
        if (g.degree() >= 2) CHECK_FALSE(has_root_fp(g));
    }
  }
}

TEST_CASE("factor over Q examples") {
  auto f = q_poly({-2, 0, 1});
  auto fac = factor(f);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == f);

  auto sq = factor(q_poly({0, 0, 1}));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].first == q_poly({0, 1}));
  CHECK(sq.factors[0].second == 2);

  CHECK_THROWS_AS(factor(Poly<Rationals>(Rationals{})), DomainError);
}

TEST_CASE("factor over Q: reassembly and rational-root candidates") {
  // products of known small factors, including Swinnerton-Dyer-like x^4 - 10x^2 + 1
  std::vector<Poly<Rationals>> pieces = {q_poly({1, 1}),       q_poly({-2, 0, 1}),  q_poly({1, 0, 1}),
                                         q_poly({1, 0, -10, 0, 1}), q_poly({-1, 3}), q_poly({2, -1, 0, 1}),
                                         q_poly({1, 1, 1})};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Poly<Rationals> f = Poly<Rationals>::constant(Rationals{}, mpq_class(1 + trial % 3, 2));
    std::size_t expected = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (rng() % 3 == 0) {
        f = f * pieces[i];
        ++expected;
      }
    if (f.degree() < 1) continue;
    auto fac = factor(f);
    CHECK(fac.expand(Rationals{}) == f);
    std::size_t count = 0;
    for (auto& [g, m] : fac.factors) {
      count += m;
      if (g.degree() < 2) continue;
      // rational roots p/q with p | a_0, q | a_n of the primitive integer form
      mpz_class den = 1;
      for (auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      mpz_class a0 = mpq_class(g.coeff(0) * den).get_num();
      mpz_class an = mpq_class(g.leading() * den).get_num();
      for (long pn = 1; pn <= abs(a0); ++pn) {
        if (a0 % pn != 0) continue;
        for (long qd = 1; qd <= abs(an); ++qd) {
          if (an % qd != 0) continue;
          CHECK(g.evaluate(mpq_class(pn, qd)) != 0);
          CHECK(g.evaluate(mpq_class(-pn, qd)) != 0);
        }
      }
    }
    CHECK(count == expected);
  }
}
