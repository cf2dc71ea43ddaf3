#include "gradalg/k_zero.hpp"

#include <algorithm>

#include "gradalg/algebra_file.hpp"
#include "gradalg/azumaya.hpp"
#include "gradalg/detail/dense_algebra.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded_module.hpp"

namespace gradalg {

using detail::DenseAlgebra;

namespace {

template <ExactField K>
using VecOf = std::vector<typename K::value_type>;

Json factors_json(const std::vector<mpz_class>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(f.get_str());
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    out.push_back(row);
  }
  return out;
}

// Free group on Gamma / S in which [X(g)] has index cosets.index_of(g).
K0Group coset_group(const CosetSpace& cosets) {
  K0Group out;
  for (const auto& r : cosets.representatives) out.labels.push_back(cosets.parent.format(r) + "+Γ*");
  return out;
}

CosetSpace division_cosets(const GradedAlgebra& d) {
  auto v = is_graded_division_ring(d);
  if (!v.yes()) throw HypothesisError("not a graded division ring: " + v.reason);
  return coset_space(d.group(), Subgroup(d.group(), support(d)));
}

// Graded K0 of a graded field R: cosets of Gamma / Gamma*_R.
CosetSpace field_cosets(const GradedAlgebra& r) {
  auto v = is_graded_field(r);
  if (!v.yes()) throw HypothesisError("the base is not a graded field: " + v.reason);
  return coset_space(r.group(), Subgroup(r.group(), support(r)));
}

// K0gr(A) = Z[Gamma / S] with [R(g)] -> sum_j [class(g - offset_j)].
struct ShiftModel {
  CosetSpace domain;
  CosetSpace codomain;
  std::vector<GroupElement> offsets;
  std::string route;
};

std::optional<ShiftModel> matrix_model(const GradedAlgebra& a) {
  const auto& p = a.provenance();
  if (!p.is_object() || !p.contains("kind") || p["kind"] != "matrix-shift") return std::nullopt;
  auto d = from_json(p.at("algebra"));
  std::vector<GroupElement> shifts;
  for (const auto& s : p.at("shifts")) shifts.push_back(element_from_json(a.group(), s));
  if (!matrix_shift(d, shifts).same_table(a))
    throw StructuralError("matrix-shift provenance does not reproduce the algebra");
  auto dv = is_graded_division_ring(d);
  if (!dv.yes()) return std::nullopt;
  return ShiftModel{field_cosets(base_algebra(a)), division_cosets(d), shifts, "matrix"};
}

ShiftModel division_model(const GradedAlgebra& a) {
  return ShiftModel{field_cosets(base_algebra(a)), division_cosets(a), {a.group().zero()}, "division"};
}

std::optional<ShiftModel> shift_model(const GradedAlgebra& a, K0Route route) {
  switch (route) {
    case K0Route::division: return division_model(a);
    case K0Route::matrix: {
      auto m = matrix_model(a);
      if (!m) throw HypothesisError("no matrix-shift provenance over a graded division ring");
      return m;
    }
    case K0Route::dade: return std::nullopt;
    case K0Route::automatic: break;
  }
  if (is_graded_division_ring(a).yes()) return division_model(a);
  if (auto m = matrix_model(a)) return m;
  return std::nullopt;
}

K0Map shift_map(const ShiftModel& m) {
  K0Map out;
  out.domain = coset_group(m.domain);
  out.codomain = coset_group(m.codomain);
  out.route = m.route;
  out.matrix = IntMatrix(out.codomain.rank(), out.domain.rank());
  const auto& g = m.domain.parent;
  for (std::size_t c = 0; c < m.domain.representatives.size(); ++c)
    for (const auto& off : m.offsets) out.matrix(m.codomain.index_of(g.sub(m.domain.representatives[c], off)), c) += 1;
  return out;
}

// Semisimple decomposition data of an algebra B: central primitive idempotents
// and, per block, its dimension, centre dimension and matrix degree.
struct Blocks {
  std::vector<Element> idempotents;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> center_dims;
};

Blocks semisimple_blocks(const GradedAlgebra& b) {
  auto z = center(b);
  Blocks out;
  out.idempotents = primitive_idempotents(b, z.basis);
  with_field(b.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> d(b, K);
    for (const auto& e : out.idempotents) {
      auto ev = d.to_vec(e);
      EchelonBasis<F> block(K, b.dim()), zb(K, b.dim());
      for (std::size_t x = 0; x < b.dim(); ++x) block.insert(d.mul(d.basis(x), ev));
      for (const auto& zv : z.basis) zb.insert(d.mul(d.to_vec(zv), ev));
      out.dims.push_back(block.dim());
      out.center_dims.push_back(zb.dim());
    }
  });
  return out;
}

template <ExactField K>
std::size_t corner_dim(const DenseAlgebra<K>& d, const VecOf<K>& f) {
  EchelonBasis<K> s(d.field(), d.dim());
  for (std::size_t x = 0; x < d.dim(); ++x) s.insert(d.mul(d.mul(f, d.basis(x)), f));
  return s.dim();
}

// Splits f into primitive idempotents of the commutative algebra k[x] f.
template <ExactField K>
std::vector<VecOf<K>> split_corner(const DenseAlgebra<K>& d, const VecOf<K>& f, const VecOf<K>& x) {
  EchelonBasis<K> powers(d.field(), d.dim());
  std::vector<VecOf<K>> basis;
  for (auto cur = f; powers.insert(cur); cur = d.mul(cur, x)) basis.push_back(cur);
  return detail::primitive_idempotents(d, basis, f);
}

// Matrix degree r of the simple algebra B e = M_r(Delta) with centre of dimension zdim.
template <ExactField K>
std::optional<std::size_t> matrix_degree(const DenseAlgebra<K>& d, const VecOf<K>& e, std::size_t bdim,
                                         std::size_t zdim) {
  if (bdim % zdim != 0) return std::nullopt;
  const std::size_t ratio = bdim / zdim;
  if (ratio == 1) return 1;
  if constexpr (std::is_same_v<K, PrimeField>) {
    // finite division rings are commutative: B e = M_r(F_q) with r^2 = ratio
    std::size_t r = 1;
    while (r * r < ratio) ++r;
    if (r * r == ratio) return r;
    return std::nullopt;
  } else {
    std::vector<VecOf<K>> idems{e};
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < idems.size() && !progress; ++i) {
        const auto f = idems[i];
        if (corner_dim(d, f) == zdim) continue;
        std::vector<VecOf<K>> candidates;
        for (std::size_t x = 0; x < d.dim(); ++x) candidates.push_back(d.basis(x));
        for (std::size_t x = 0; x < d.dim(); ++x)
          for (std::size_t y = x + 1; y < d.dim(); ++y) candidates.push_back(d.add(d.basis(x), d.basis(y)));
        for (const auto& c : candidates) {
          auto fx = d.mul(d.mul(f, c), f);
          if (d.is_zero(fx)) continue;
          auto pieces = split_corner(d, f, fx);
          if (pieces.size() < 2) continue;
          idems.erase(idems.begin() + static_cast<long>(i));
          idems.insert(idems.end(), pieces.begin(), pieces.end());
          progress = true;
          break;
        }
      }
    }
    for (const auto& f : idems)
      if (corner_dim(d, f) != zdim) return std::nullopt;
    return idems.size();
  }
}

K0Map dade_map(const GradedAlgebra& a) {
  auto sv = is_strongly_graded(a);
  if (!sv.yes()) throw HypothesisError("not strongly graded: " + sv.reason);
  auto a0 = degree_zero_part(a);
  if (!jacobson_radical(a0).basis.empty()) throw UnsupportedError("the Dade route needs a semisimple A_0");
  auto blocks = semisimple_blocks(a0);
  auto rcos = field_cosets(base_algebra(a));

  K0Map out;
  out.domain = coset_group(rcos);
  out.codomain = k0gr_via_dade(a);
  out.route = "dade";
  const std::size_t nb = blocks.idempotents.size();
  out.matrix = IntMatrix(nb, out.domain.rank());
  auto comps = a.components();
  std::vector<std::size_t> zero_idx = comps.at(a.group().zero());

  with_field(a.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> d(a, K);
    DenseAlgebra<F> d0(a0, K);
    for (std::size_t b = 0; b < nb; ++b) {
      auto e0 = d0.to_vec(blocks.idempotents[b]);
      auto r = matrix_degree(d0, e0, blocks.dims[b], blocks.center_dims[b]);
      if (!r) throw UnsupportedError("cannot determine the simple module of an A_0 block over Q");
      const std::size_t simple_dim = blocks.dims[b] / *r;
      // the block idempotent inside A
      VecOf<F> e = d.zero();
      for (std::size_t p = 0; p < zero_idx.size(); ++p) e[zero_idx[p]] = e0[p];
      for (std::size_t c = 0; c < rcos.representatives.size(); ++c) {
        EchelonBasis<F> span(K, a.dim());
        auto it = comps.find(rcos.representatives[c]);
        if (it != comps.end())
          for (auto x : it->second) span.insert(d.mul(d.basis(x), e));
        if (span.dim() % simple_dim != 0) throw StructuralError("A_g e is not a multiple of the simple module");
        out.matrix(b, c) = static_cast<unsigned long>(span.dim() / simple_dim);
      }
    }
  });
  return out;
}

bool in_lattice(const IntMatrix& generators_as_columns, const std::vector<mpz_class>& v) {
  if (generators_as_columns.cols() == 0) return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
  return lattice_coordinates(generators_as_columns.transpose(), v).has_value();
}

std::vector<mpz_class> column(const IntMatrix& m, std::size_t c) {
  std::vector<mpz_class> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

bool columns_in_lattice(const IntMatrix& cols, const IntMatrix& lattice) {
  for (std::size_t c = 0; c < cols.cols(); ++c)
    if (!in_lattice(lattice, column(cols, c))) return false;
  return true;
}

IntMatrix scaled(IntMatrix m, long k) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= k;
  return m;
}

}  // namespace

Json K0Group::to_json() const {
  Json out = {{"rank", rank()}, {"generators", labels}, {"torsion", factors_json(torsion)}};
  if (!block_dims.empty()) out["block_dims"] = block_dims;
  return out;
}

Json K0Map::to_json() const {
  return {{"route", route}, {"domain", domain.to_json()}, {"codomain", codomain.to_json()}, {"matrix", matrix_json(matrix)}};
}

K0Group k0gr_graded_division(const GradedAlgebra& d) { return coset_group(division_cosets(d)); }

K0Group k0_ungraded(const GradedAlgebra& a) {
  auto j = jacobson_radical(a);
  auto bar = j.basis.empty() ? a : quotient_algebra(a, j.basis, false);
  auto blocks = semisimple_blocks(bar);
  K0Group out;
  for (std::size_t b = 0; b < blocks.idempotents.size(); ++b) out.labels.push_back("S" + std::to_string(b + 1));
  out.block_dims = blocks.dims;
  return out;
}

Verdict is_strongly_graded(const GradedAlgebra& a) {
  const auto& g = a.group();
  if (!g.is_finite())
    return Verdict::make(Truth::no, "the grade group is infinite, so some component A_g vanishes",
                         {{"kind", "vanishing-component"}, {"group", g.describe()}});
  auto comps = a.components();
  return with_field(a.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> d(a, K);
    for (const auto& gamma : g.elements()) {
      auto it = comps.find(gamma);
      auto jt = comps.find(g.neg(gamma));
      EchelonBasis<F> span(K, a.dim());
      if (it != comps.end() && jt != comps.end())
        for (auto x : it->second)
          for (auto y : jt->second) span.insert(d.mul(d.basis(x), d.basis(y)));
      if (!span.contains(d.unit()))
        return Verdict::make(Truth::no, "1 is not in A_g A_-g for g = " + g.format(gamma),
                             {{"kind", "strong-grading-failure"}, {"degree", gamma.coords}});
    }
    return Verdict::make(Truth::yes, "1 lies in A_g A_-g for every g", {{"kind", "strongly-graded"}});
  });
}

K0Group k0gr_via_dade(const GradedAlgebra& a) {
  auto v = is_strongly_graded(a);
  if (!v.yes()) throw HypothesisError("not strongly graded: " + v.reason);
  return k0_ungraded(degree_zero_part(a));
}

std::string to_string(K0Route r) {
  switch (r) {
    case K0Route::division: return "division";
    case K0Route::matrix: return "matrix";
    case K0Route::dade: return "dade";
    default: return "auto";
  }
}

K0Route route_from_string(const std::string& s) {
  if (s == "auto") return K0Route::automatic;
  if (s == "division") return K0Route::division;
  if (s == "matrix") return K0Route::matrix;
  if (s == "dade") return K0Route::dade;
  throw DomainError("unknown K0 route '" + s + "'");
}

K0Group k0gr(const GradedAlgebra& a, K0Route route) {
  if (route == K0Route::division) return k0gr_graded_division(a);
  if (route == K0Route::dade) return k0gr_via_dade(a);
  if (route == K0Route::matrix) {
    auto m = matrix_model(a);
    if (!m) throw HypothesisError("no matrix-shift provenance over a graded division ring");
    return coset_group(m->codomain);
  }
  if (is_graded_division_ring(a).yes()) return k0gr_graded_division(a);
  if (auto m = matrix_model(a)) return coset_group(m->codomain);
  if (is_strongly_graded(a).yes()) return k0gr_via_dade(a);
  throw UnsupportedError(
      "graded K0 is implemented for graded division rings, matrix-shift algebras over them and strongly graded algebras");
}

K0Map k0gr_map(const GradedAlgebra& a, K0Route route) {
  if (auto m = shift_model(a, route)) return shift_map(*m);
  if (route == K0Route::automatic && !is_strongly_graded(a).yes())
    throw UnsupportedError(
        "graded K0 is implemented for graded division rings, matrix-shift algebras over them and strongly graded "
        "algebras");
  return dade_map(a);
}

Json TorsionReport::to_json() const {
  return {{"n", n},
          {"kernel", {{"free_rank", kernel_rank}, {"torsion", factors_json(kernel_factors)}}},
          {"cokernel", {{"free_rank", cokernel_free_rank}, {"torsion", factors_json(cokernel_factors)}}},
          {"kernel_finite", kernel_finite},
          {"cokernel_finite", cokernel_finite},
          {"is_n2_torsion", is_n2_torsion},
          {"n_smooth", n_smooth},
          {"localized_iso", localized_iso}};
}

TorsionReport torsion_report(const K0Map& m, std::size_t n) {
  if (n == 0) throw DomainError("torsion report needs n >= 1");
  TorsionReport out;
  out.n = n;
  auto snf = smith_normal_form(m.matrix);
  out.kernel_rank = m.matrix.cols() - snf.rank;
  out.cokernel_free_rank = m.matrix.rows() - snf.rank;
  for (const auto& f : snf.invariant_factors)
    if (f > 1) out.cokernel_factors.push_back(f);
  out.kernel_finite = out.kernel_rank == 0;
  out.cokernel_finite = out.cokernel_free_rank == 0;
  const mpz_class nn = mpz_class(static_cast<unsigned long>(n));
  const mpz_class n2 = nn * nn;
  out.n_smooth = true;
  bool divides = true;
  for (const auto& f : out.cokernel_factors) {
    if (n2 % f != 0) divides = false;
    mpz_class rest = f, g;
    for (g = gcd(rest, nn); g > 1; g = gcd(rest, nn)) rest /= g;
    if (rest != 1) out.n_smooth = false;
  }
  out.is_n2_torsion = out.kernel_finite && out.cokernel_finite && divides;
  out.localized_iso = out.kernel_finite && out.cokernel_finite && out.n_smooth;
  return out;
}

Json TorsionHypotheses::to_json(const GradeGroup& g) const {
  Json degs = Json::array();
  for (const auto& d : basis_degrees) degs.push_back(g.format(d));
  return {{"graded_azumaya", gradalg::to_string(graded_azumaya)},
          {"graded_free", graded_free},
          {"rank", rank},
          {"basis_degrees", degs},
          {"degrees_in_gamma_star", gradalg::to_string(degrees_in_gamma_star)},
          {"hold", hold()},
          {"failure", failure}};
}

TorsionHypotheses torsion_hypotheses(const GradedAlgebra& a) {
  TorsionHypotheses out;
  out.graded_azumaya = is_graded_azumaya(a).verdict;
  auto chosen = homogeneous_base_basis(a);
  out.graded_free = chosen.has_value();
  if (chosen) {
    out.rank = chosen->size();
    for (auto x : *chosen) out.basis_degrees.push_back(a.degree(x));
    out.degrees_in_gamma_star = gamma_star_membership(base_algebra(a), out.basis_degrees).truth;
  }
  if (out.graded_azumaya != Truth::yes)
    out.failure = "A is not known to be graded Azumaya over R";
  else if (!out.graded_free)
    out.failure = "A is not graded free over R";
  else if (out.degrees_in_gamma_star != Truth::yes)
    out.failure = "the basis degrees are not known to lie in Gamma*_{M_n(R)}";
  return out;
}

Json TorsionCheck::to_json(const GradeGroup& g) const {
  Json out = {{"hypotheses", hypotheses.to_json(g)}, {"map", map.to_json()}, {"report", report.to_json()}};
  if (!hypotheses.hold()) out["notice"] = "hypotheses fail: " + hypotheses.failure + "; the report below is raw";
  return out;
}

TorsionCheck torsion_check(const GradedAlgebra& a, K0Route route) {
  TorsionCheck out;
  out.hypotheses = torsion_hypotheses(a);
  out.map = k0gr_map(a, route);
  out.report = torsion_report(out.map, std::max<std::size_t>(out.hypotheses.rank, 1));
  return out;
}

Json DFunctorReport::to_json() const {
  return {{"k", k},
          {"hypothesis", gradalg::to_string(hypothesis)},
          {"composite", matrix_json(composite)},
          {"composite_is_k", composite_is_k},
          {"CK", {{"axiom1", axiom1_ck}, {"axiom2", axiom2_ck}, {"axiom3", axiom3_ck}}},
          {"ZK", {{"axiom1", axiom1_zk}, {"axiom2", axiom2_zk}, {"axiom3", axiom3_zk}}},
          {"all_pass", all_pass()},
          {"note", note}};
}

IntMatrix shift_composite(const GradedAlgebra& a, const std::vector<GroupElement>& d, K0Route route) {
  auto m = shift_model(a, route);
  if (!m) throw UnsupportedError("shift action is implemented for the division and matrix routes only");
  const auto& cos = m->codomain;
  const auto& g = cos.parent;
  const std::size_t c = cos.representatives.size();
  IntMatrix out(c, c);
  for (std::size_t j = 0; j < c; ++j)
    for (const auto& delta : d) out(cos.index_of(g.sub(cos.representatives[j], delta)), j) += 1;
  return out;
}

DFunctorReport dfunctor_axiom_suite(const GradedAlgebra& a, const std::vector<GroupElement>& d, K0Route route) {
  if (d.empty()) throw DomainError("dfunctor check needs k >= 1 shifts");
  DFunctorReport out;
  out.k = d.size();
  const long k = static_cast<long>(out.k);
  auto r = base_algebra(a);
  out.hypothesis = gamma_star_membership(r, d).truth;

  // axiom 1: K0gr(R) -> K0gr(R) is the identity
  DesignatedBase all;
  for (std::size_t x = 0; x < r.dim(); ++x) all.elements.push_back(r.basis_element(x));
  auto fr = k0gr_map(r.with_base(all), K0Route::division);
  auto tr = torsion_report(fr, 1);
  out.axiom1_ck = tr.cokernel_finite && tr.cokernel_factors.empty();
  out.axiom1_zk = tr.kernel_rank == 0;

  auto fa = k0gr_map(a, route);
  out.composite = shift_composite(a, d, route);
  out.composite_is_k = out.composite == scaled(IntMatrix::identity(out.composite.rows()), k);
  // transported through psi, f_M = C f_A
  IntMatrix fm = out.composite * fa.matrix;

  // CK: phi is [x] -> [C x], rho is induced by the identity
  const bool rho_ck = columns_in_lattice(fm, fa.matrix);
  IntMatrix deviation = out.composite;
  for (std::size_t i = 0; i < deviation.rows(); ++i) deviation(i, i) -= k;
  out.axiom2_ck = rho_ck && columns_in_lattice(deviation, fa.matrix);
  out.axiom3_ck = rho_ck && columns_in_lattice(scaled(fa.matrix, k), fm);

  // ZK: phi is the inclusion ker f_A -> ker f_M, rho is multiplication by k
  auto ker_m = integer_kernel(fm);
  auto ker_a = integer_kernel(fa.matrix);
  bool inclusion = (fm * ker_a).is_zero();
  bool rho_zk = (fa.matrix * scaled(ker_m, k)).is_zero();
  out.axiom2_zk = inclusion && rho_zk;
  // ker rho = {v in ker f_M : k v = 0} = 0 in a free group
  out.axiom3_zk = rho_zk;

  if (out.hypothesis != Truth::yes)
    out.note = "d is not known to lie in Gamma*_{M_k(R)}; the properties are reported without that hypothesis";
  return out;
}

}  // namespace gradalg
