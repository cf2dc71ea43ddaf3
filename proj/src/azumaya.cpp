#include "gradalg/azumaya.hpp"

#include "gradalg/algebra_file.hpp"
#include "gradalg/detail/dense_algebra.hpp"
#include "gradalg/errors.hpp"

namespace gradalg {

using detail::Coordinates;
using detail::DenseAlgebra;

namespace {

template <ExactField K>
using VecOf = std::vector<typename K::value_type>;

template <ExactField K>
std::vector<VecOf<K>> to_vecs(const DenseAlgebra<K>& d, const std::vector<Element>& es) {
  std::vector<VecOf<K>> out;
  for (const auto& e : es) out.push_back(d.to_vec(e));
  return out;
}

template <ExactField K>
std::optional<std::vector<std::size_t>> greedy_basis(const GradedAlgebra& a, const DenseAlgebra<K>& d,
                                                     const std::vector<VecOf<K>>& r) {
  EchelonBasis<K> span(d.field(), a.dim());
  std::vector<std::size_t> chosen;
  for (std::size_t x = 0; x < a.dim() && span.dim() < a.dim(); ++x) {
    std::size_t added = 0;
    for (const auto& rl : r)
      if (span.insert(d.mul(rl, d.basis(x)))) ++added;
    if (added == r.size())
      chosen.push_back(x);
    else if (added != 0)
      return std::nullopt;
  }
  if (span.dim() != a.dim()) return std::nullopt;
  return chosen;
}

template <ExactField K>
PsiMatrix psi_impl(const GradedAlgebra& a, const DenseAlgebra<K>& d,
                   const std::optional<std::vector<std::size_t>>& given = std::nullopt) {
  const K& f = d.field();
  auto base = a.base_or_ground().elements;
  auto r = to_vecs(d, base);
  auto chosen = given ? given : greedy_basis(a, d, r);
  if (!chosen) throw UnsupportedError("no homogeneous basis of A over the designated base");
  if (given) {
    EchelonBasis<K> span(f, a.dim());
    for (auto x : *given) {
      if (x >= a.dim()) throw DomainError("basis index out of range");
      for (const auto& rl : r)
        if (!span.insert(d.mul(rl, d.basis(x)))) throw DomainError("the given elements are not independent over the base");
    }
    if (span.dim() != a.dim()) throw DomainError("the given elements do not span A over the base");
  }
  const std::size_t n = chosen->size(), s = r.size();
  PsiMatrix out;
  out.base_basis = base;
  for (auto x : *chosen) {
    out.basis.push_back(a.basis_element(x));
    out.degrees.push_back(a.degree(x));
  }
  // family r_l c_p at p * s + l
  std::vector<VecOf<K>> family;
  for (auto x : *chosen)
    for (const auto& rl : r) family.push_back(d.mul(rl, d.basis(x)));
  Coordinates<K> coords(f, a.dim(), family);
  Coordinates<K> rcoords(f, a.dim(), r);
  // rr[l][l2] = coordinates of r_l r_l2
  std::vector<std::vector<VecOf<K>>> rr(s, std::vector<VecOf<K>>(s));
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t l2 = 0; l2 < s; ++l2) rr[l][l2] = rcoords.at(d.mul(r[l], r[l2]));

  const auto& g = a.group();
  const std::size_t cells = n * n * n * n;
  out.entries.assign(cells, Element(s, 0));
  out.entry_degrees.assign(cells, std::nullopt);
  std::vector<VecOf<K>> rho(cells, VecOf<K>(s, f.zero()));
  out.degree_preserving = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < n; ++q) {
        auto y = d.mul(d.mul(d.basis((*chosen)[i]), d.basis((*chosen)[q])), d.basis((*chosen)[j]));
        auto c = coords.at(y);
        for (std::size_t p = 0; p < n; ++p) {
          const std::size_t cell = (p * n + q) * n * n + i * n + j;
          VecOf<K> as_a = d.zero();
          bool nonzero = false;
          for (std::size_t l = 0; l < s; ++l) {
            rho[cell][l] = c[p * s + l];
            out.entries[cell][l] = f.to_rational(c[p * s + l]);
            if (!f.is_zero(c[p * s + l])) {
              nonzero = true;
              as_a = d.add(as_a, d.scale(c[p * s + l], r[l]));
            }
          }
          if (!nonzero) continue;
          auto deg = a.homogeneous_degree(d.to_element(as_a));
          auto want = g.sub(g.add(g.add(out.degrees[i], out.degrees[j]), out.degrees[q]), out.degrees[p]);
          if (deg) out.entry_degrees[cell] = deg;
          if (!deg || *deg != want) out.degree_preserving = false;
        }
      }
  // expand over k: column (i, j, l) is r_l c_i (x) c_j, row (p, q, l2) is r_l2 E_pq
  const std::size_t size = n * n * s;
  Matrix<K> big(f, size, size);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const std::size_t pq = cell / (n * n), ij = cell % (n * n);
    for (std::size_t l = 0; l < s; ++l)
      for (std::size_t l1 = 0; l1 < s; ++l1) {
        if (f.is_zero(rho[cell][l1])) continue;
        for (std::size_t l2 = 0; l2 < s; ++l2) f.fma(big(pq * s + l2, ij * s + l), rho[cell][l1], rr[l][l1][l2]);
      }
  }
  out.k_rank = rank(big);
  out.bijective = out.k_rank == size;
  return out;
}

template <ExactField K>
SandwichReport sandwich_impl(const GradedAlgebra& a, const DenseAlgebra<K>& d, const std::vector<Element>& base) {
  const K& f = d.field();
  const std::size_t n = a.dim();
  auto z = to_vecs(d, base);
  SandwichReport out;
  out.dim_algebra = n;
  out.dim_base = z.size();

  // local factors of the base
  auto idems = detail::primitive_idempotents(d, z, d.unit());
  out.projective = true;
  for (const auto& e : idems) {
    LocalBlock blk;
    blk.idempotent = d.to_element(e);
    EchelonBasis<K> ze_span(f, n);
    std::vector<VecOf<K>> ze;
    for (const auto& zz : z) {
      auto v = d.mul(zz, e);
      if (ze_span.insert(v)) ze.push_back(v);
    }
    blk.dim_base = ze.size();
    EchelonBasis<K> ae(f, n);
    for (std::size_t x = 0; x < n; ++x) ae.insert(d.mul(d.basis(x), e));
    blk.dim_algebra = ae.dim();
    // Z e as a standalone algebra with unit e
    Coordinates<K> zc(f, n, ze);
    GradeGroup triv;
    std::vector<BasisElement> names;
    for (std::size_t t = 0; t < ze.size(); ++t) names.push_back({"z" + std::to_string(t), triv.zero()});
    std::vector<StructureConstant> table;
    for (std::size_t t = 0; t < ze.size(); ++t)
      for (std::size_t u = 0; u < ze.size(); ++u) {
        auto c = zc.at(d.mul(ze[t], ze[u]));
        for (std::size_t w = 0; w < c.size(); ++w)
          if (!f.is_zero(c[w])) table.push_back({t, u, w, f.to_rational(c[w])});
      }
    Element unit_e;
    for (const auto& c : zc.at(e)) unit_e.push_back(f.to_rational(c));
    GradedAlgebra local(a.field(), triv, std::move(names), std::move(table), std::move(unit_e));
    auto rad = jacobson_radical(local);
    blk.dim_radical = rad.dim();
    // m A e
    EchelonBasis<K> mae(f, n);
    for (const auto& jv : rad.basis) {
      auto jj = d.zero();
      for (std::size_t t = 0; t < ze.size(); ++t) jj = d.add(jj, d.scale(f.from_rational(jv[t]), ze[t]));
      for (std::size_t x = 0; x < n; ++x) mae.insert(d.mul(jj, d.mul(d.basis(x), e)));
    }
    const std::size_t residue = blk.dim_base - blk.dim_radical;
    const std::size_t top = blk.dim_algebra - mae.dim();
    blk.generators = top / residue;
    blk.free = top % residue == 0 && blk.generators * blk.dim_base == blk.dim_algebra;
    if (!blk.free) out.projective = false;
    out.blocks.push_back(std::move(blk));
  }

  // A (x)_Z A^op: A (x)_k A modulo b_i z (x) b_j - b_i (x) z b_j
  EchelonBasis<K> rel(f, n * n);
  for (const auto& zz : z)
    for (std::size_t i = 0; i < n; ++i) {
      auto iz = d.mul(d.basis(i), zz);
      for (std::size_t j = 0; j < n; ++j) {
        auto zj = d.mul(zz, d.basis(j));
        VecOf<K> v(n * n, f.zero());
        for (std::size_t x = 0; x < n; ++x) v[x * n + j] = f.add(v[x * n + j], iz[x]);
        for (std::size_t y = 0; y < n; ++y) v[i * n + y] = f.sub(v[i * n + y], zj[y]);
        rel.insert(v);
      }
    }
  out.dim_tensor = n * n - rel.dim();

  // End_Z(A): F L_z = L_z F, with F stored row-major
  Matrix<K> eqs(f, z.size() * n * n, n * n);
  for (std::size_t t = 0; t < z.size(); ++t) {
    auto lz = d.left_matrix(z[t]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = (t * n + r) * n + c;
        // (F L_z)(r, c) - (L_z F)(r, c)
        for (std::size_t k = 0; k < n; ++k) {
          f.fma(eqs(row, r * n + k), lz(k, c), f.one());
          eqs(row, k * n + c) = f.sub(eqs(row, k * n + c), lz(r, k));
        }
      }
  }
  out.dim_end = n * n - rank(eqs);

  // image of psi: span of L_{b_i} R_{b_j}
  EchelonBasis<K> image(f, n * n);
  std::vector<Matrix<K>> rights;
  for (std::size_t j = 0; j < n; ++j) rights.push_back(d.right_matrix(d.basis(j)));
  for (std::size_t i = 0; i < n; ++i) {
    auto l = d.left_matrix(d.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = l * rights[j];
      VecOf<K> v(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v[r * n + c] = prod(r, c);
      image.insert(v);
    }
  }
  out.rank_psi = image.dim();
  out.psi_bijective = out.rank_psi == out.dim_tensor && out.rank_psi == out.dim_end;
  out.verdict = truth_of(out.projective && out.psi_bijective);
  if (!out.projective)
    out.reason = "not projective: some local factor of the base does not act freely";
  else if (!out.psi_bijective)
    out.reason = "psi is not bijective: dim A(x)A^op = " + std::to_string(out.dim_tensor) +
                 ", dim End = " + std::to_string(out.dim_end) + ", rank psi = " + std::to_string(out.rank_psi);
  else
    out.reason = "projective over the base and psi is bijective";
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> homogeneous_base_basis(const GradedAlgebra& a) {
  return with_field(a.field(), [&](auto K) {
    DenseAlgebra<decltype(K)> d(a, K);
    return greedy_basis(a, d, to_vecs(d, a.base_or_ground().elements));
  });
}

PsiMatrix psi_matrix(const GradedAlgebra& a) {
  auto v = validate(a);
  if (!v.ok) throw DomainError("invalid algebra or base: " + v.message);
  return with_field(a.field(), [&](auto K) { return psi_impl(a, DenseAlgebra<decltype(K)>(a, K)); });
}

PsiMatrix psi_matrix(const GradedAlgebra& a, const std::vector<std::size_t>& basis) {
  auto v = validate(a);
  if (!v.ok) throw DomainError("invalid algebra or base: " + v.message);
  return with_field(a.field(), [&](auto K) { return psi_impl(a, DenseAlgebra<decltype(K)>(a, K), basis); });
}

SandwichReport azumaya_over_base(const GradedAlgebra& a, const std::vector<Element>& base) {
  try {
    return with_field(a.field(), [&](auto K) { return sandwich_impl(a, DenseAlgebra<decltype(K)>(a, K), base); });
  } catch (const FactorizationCapError& e) {
    SandwichReport out;
    out.verdict = Truth::undetermined;
    out.reason = std::string("idempotent splitting hit a cap: ") + e.what();
    return out;
  }
}

SandwichReport azumaya_over_center(const GradedAlgebra& a) { return azumaya_over_base(a, center(a).basis); }

AzumayaReport is_graded_azumaya(const GradedAlgebra& a) {
  AzumayaReport out;
  std::optional<PsiMatrix> psi;
  try {
    psi = psi_matrix(a);
  } catch (const UnsupportedError&) {
  }
  if (psi) {
    Json basis = Json::array();
    for (const auto& c : psi->basis) basis.push_back(element_to_json(c));
    out.faithfully_projective =
        Verdict::make(Truth::yes, "graded free of rank " + std::to_string(psi->rank()) + " over the base",
                      {{"kind", "free-basis"}, {"basis", basis}});
    out.psi_bijective = psi->bijective;
    out.psi_graded = psi->degree_preserving;
    out.psi = std::move(psi);
  } else {
    auto s = azumaya_over_base(a, a.base_or_ground().elements);
    if (s.verdict == Truth::undetermined && s.blocks.empty()) {
      out.faithfully_projective = Verdict::make(Truth::undetermined, s.reason);
    } else {
      Json blocks = Json::array();
      for (const auto& b : s.blocks)
        blocks.push_back({{"dim_base", b.dim_base}, {"dim_algebra", b.dim_algebra}, {"generators", b.generators}});
      out.faithfully_projective =
          Verdict::make(truth_of(s.projective),
                        s.projective ? "locally free over every factor of the base" : "not locally free over the base",
                        {{"kind", "local-freeness"}, {"blocks", blocks}});
      out.psi_bijective = s.psi_bijective;
    }
    // psi(b_i (x) b_j) maps A_g into A_{g + deg b_i + deg b_j}
    out.psi_graded = true;
    const auto& g = a.group();
    for (std::size_t i = 0; i < a.dim() && out.psi_graded; ++i)
      for (std::size_t q = 0; q < a.dim() && out.psi_graded; ++q)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          auto y = a.multiply(a.multiply(a.basis_element(i), a.basis_element(q)), a.basis_element(j));
          if (a.is_zero(y)) continue;
          auto deg = a.homogeneous_degree(y);
          if (!deg || *deg != g.add(g.add(a.degree(i), a.degree(q)), a.degree(j))) {
            out.psi_graded = false;
            break;
          }
        }
    out.sandwich = std::move(s);
  }
  out.verdict = both(out.faithfully_projective.truth, truth_of(out.psi_bijective && out.psi_graded));
  if (out.faithfully_projective.truth == Truth::undetermined) out.verdict = Truth::undetermined;
  return out;
}

Json PsiMatrix::to_json(const GradeGroup& g) const {
  const std::size_t n = rank();
  Json rows = Json::array();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Json row = Json::array();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t cell = (p * n + q) * n * n + i * n + j;
          Json e = {{"coords", element_to_json(entries[cell])}};
          e["degree"] = entry_degrees[cell] ? Json(g.format(*entry_degrees[cell])) : Json(nullptr);
          row.push_back(std::move(e));
        }
      rows.push_back(std::move(row));
    }
  Json basis = Json::array(), degs = Json::array(), rb = Json::array();
  for (const auto& c : this->basis) basis.push_back(element_to_json(c));
  for (const auto& d : degrees) degs.push_back(d.coords);
  for (const auto& r : base_basis) rb.push_back(element_to_json(r));
  return {{"rank_over_base", n}, {"base_basis", rb}, {"basis", basis}, {"degrees", degs},
          {"k_rank", k_rank},    {"bijective", bijective}, {"degree_preserving", degree_preserving},
          {"matrix", rows}};
}

Json SandwichReport::to_json() const {
  Json bl = Json::array();
  for (const auto& b : blocks)
    bl.push_back({{"idempotent", element_to_json(b.idempotent)},
                  {"dim_base", b.dim_base},
                  {"dim_radical", b.dim_radical},
                  {"dim_algebra", b.dim_algebra},
                  {"generators", b.generators},
                  {"free", b.free}});
  return {{"verdict", gradalg::to_string(verdict)},
          {"reason", reason},
          {"dim_base", dim_base},
          {"dim_algebra", dim_algebra},
          {"dim_tensor", dim_tensor},
          {"dim_end", dim_end},
          {"rank_psi", rank_psi},
          {"projective", projective},
          {"psi_bijective", psi_bijective},
          {"blocks", bl}};
}

Json AzumayaReport::to_json(const GradeGroup& g) const {
  Json out = {{"verdict", gradalg::to_string(verdict)},
              {"faithfully_projective",
               {{"truth", gradalg::to_string(faithfully_projective.truth)},
                {"reason", faithfully_projective.reason},
                {"certificate", faithfully_projective.certificate}}},
              {"psi_bijective", psi_bijective},
              {"psi_graded", psi_graded}};
  if (psi) out["psi"] = psi->to_json(g);
  if (sandwich) out["sandwich"] = sandwich->to_json();
  return out;
}

DeMeyerJanusz demeyer_janusz(const FieldSpec& k, const FiniteGroup& g) {
  auto cc = group_center_and_commutator(g);
  DeMeyerJanusz out;
  out.group_order = g.order();
  out.center_order = cc.center.size();
  out.center_index = cc.center_index;
  out.commutator_order = cc.commutator_order;
  out.verdict = k.is_invertible_integer(cc.commutator_order);
  return out;
}

Json DeMeyerJanusz::to_json() const {
  return {{"group_order", group_order},
          {"center_order", center_order},
          {"center_index", center_index},
          {"commutator_order", commutator_order},
          {"verdict", verdict}};
}

}  // namespace gradalg
