#include "gradalg/certificate.hpp"

#include <set>

#include "gradalg/algebra_file.hpp"
#include "gradalg/detail/dense_algebra.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded_module.hpp"
#include "gradalg/polynomial.hpp"

namespace gradalg {

using detail::DenseAlgebra;

namespace {

CertificateCheck result(bool ok, std::string kind, std::string detail) {
  return {ok ? CertificateStatus::verified : CertificateStatus::refuted, std::move(kind), std::move(detail)};
}

std::vector<std::size_t> degree_zero_indices(const GradedAlgebra& a) {
  auto comps = a.components();
  auto it = comps.find(a.group().zero());
  return it == comps.end() ? std::vector<std::size_t>{} : it->second;
}

bool commutative_on(const GradedAlgebra& a, const std::vector<std::size_t>& idx) {
  for (auto i : idx)
    for (auto j : idx)
      if (a.multiply(a.basis_element(i), a.basis_element(j)) != a.multiply(a.basis_element(j), a.basis_element(i)))
        return false;
  return true;
}

template <ExactField K>
class Checker {
 public:
  using Vec = std::vector<typename K::value_type>;

  Checker(const GradedAlgebra& a, K f) : a_(a), f_(f), d_(a, f) {}

  Vec vec(const Json& j) const { return d_.to_vec(element_from_json(j, a_.dim())); }

  CertificateCheck check(const Json& c) const {
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "zero-divisor") return zero_divisor(c);
    if (kind == "proper-graded-ideal") return ideal(c);
    if (kind == "inverse-pairs") return units(c, true);
    if (kind == "graded-division") {
      auto u = units(c, false);
      if (!u.verified()) return u;
      auto z = check(c.at("degree_zero"));
      return result(z.verified(), kind, "units verified; degree zero: " + z.detail);
    }
    if (kind == "one-dimensional") return result(degree_zero_indices(a_).size() == 1, kind, "dim A_0 = 1");
    if (kind == "field") return field(c);
    if (kind == "not-a-field") return not_field(c);
    if (kind == "noncommutative-finite") {
      bool ok = !a_.field().is_rational() && !commutative_on(a_, degree_zero_indices(a_));
      return result(ok, kind, "A_0 is a noncommutative algebra over a finite field");
    }
    if (kind == "noncommuting-pair") {
      auto x = a_.basis_element(c.at("i").get<std::size_t>()), y = a_.basis_element(c.at("j").get<std::size_t>());
      return result(a_.multiply(x, y) != a_.multiply(y, x), kind, "b_i b_j != b_j b_i");
    }
    if (kind == "centre-exceeds-base") return centre_extra(c);
    if (kind == "shift-iso") return shift_iso(c);
    if (kind == "free-basis") return free_basis(c);
    if (kind == "graded-azumaya") return azumaya(c);
    if (kind == "strong-grading-failure") {
      auto g = element_from_json(a_.group(), c.at("degree"));
      return result(!one_in_product(g), kind, "1 is not in A_g A_-g");
    }
    if (kind == "strongly-graded") {
      if (!a_.group().is_finite()) return result(false, kind, "the grade group is infinite");
      for (const auto& g : a_.group().elements())
        if (!one_in_product(g)) return result(false, kind, "1 is not in A_g A_-g for g = " + a_.group().format(g));
      return result(true, kind, "1 lies in A_g A_-g for every g");
    }
    if (kind == "vanishing-component") return result(!a_.group().is_finite(), kind, "infinite grade group");
    return {CertificateStatus::unchecked, kind, "this kind carries no re-checkable witness"};
  }

 private:
  bool homogeneous(const Vec& v) const { return a_.homogeneous_degree(d_.to_element(v)).has_value(); }

  CertificateCheck zero_divisor(const Json& c) const {
    auto x = vec(c.at("x")), y = vec(c.at("y"));
    bool ok = !d_.is_zero(x) && !d_.is_zero(y) && homogeneous(x) && d_.is_zero(d_.mul(x, y));
    return result(ok, "zero-divisor", "x is homogeneous, x != 0, y != 0 and x y = 0");
  }

  CertificateCheck ideal(const Json& c) const {
    EchelonBasis<K> span(f_, a_.dim());
    std::vector<Vec> basis;
    for (const auto& e : c.at("basis")) {
      auto v = vec(e);
      if (!homogeneous(v)) return result(false, "proper-graded-ideal", "a basis vector is not homogeneous");
      if (span.insert(v)) basis.push_back(v);
    }
    if (span.dim() == 0 || span.dim() == a_.dim())
      return result(false, "proper-graded-ideal", "the span is zero or all of A");
    for (const auto& v : basis)
      for (std::size_t x = 0; x < a_.dim(); ++x)
        if (!span.contains(d_.mul(d_.basis(x), v)) || !span.contains(d_.mul(v, d_.basis(x))))
          return result(false, "proper-graded-ideal", "the span is not a two-sided ideal");
    return result(true, "proper-graded-ideal",
                  "homogeneous two-sided ideal of dimension " + std::to_string(span.dim()));
  }

  CertificateCheck units(const Json& c, bool one_dimensional) const {
    const std::string kind = c.at("kind").get<std::string>();
    std::set<GroupElement> covered;
    for (const auto& u : c.at("units")) {
      auto deg = element_from_json(a_.group(), u.at("degree"));
      auto x = vec(u.at("unit")), y = vec(u.at("inverse"));
      auto dx = a_.homogeneous_degree(d_.to_element(x));
      if (!dx || *dx != deg) return result(false, kind, "unit of degree " + a_.group().format(deg) + " is misplaced");
      if (d_.mul(x, y) != d_.unit() || d_.mul(y, x) != d_.unit())
        return result(false, kind, "a claimed inverse pair does not multiply to 1");
      covered.insert(deg);
    }
    for (const auto& [deg, idx] : a_.components()) {
      if (!covered.count(deg)) return result(false, kind, "no unit given in degree " + a_.group().format(deg));
      if (one_dimensional && idx.size() != 1) return result(false, kind, "a component has dimension > 1");
    }
    return result(true, kind, "every component contains a verified unit");
  }

  CertificateCheck field(const Json& c) const {
    auto idx0 = degree_zero_indices(a_);
    if (!commutative_on(a_, idx0)) return result(false, "field", "A_0 is not commutative");
    if (c.contains("generator")) {
      auto x = vec(c.at("generator"));
      for (std::size_t i = 0; i < a_.dim(); ++i)
        if (!f_.is_zero(x[i]) && !(a_.degree(i) == a_.group().zero()))
          return result(false, "field", "the generator is not in A_0");
      auto mu = d_.min_poly(x, d_.unit());
      if (static_cast<std::size_t>(mu.degree()) != idx0.size())
        return result(false, "field", "the generator does not generate A_0");
      auto fac = factor(mu);
      bool ok = fac.factors.size() == 1 && fac.factors[0].second == 1;
      return result(ok, "field", "A_0 = k[x] with irreducible minimal polynomial of degree " + std::to_string(idx0.size()));
    }
    auto a0 = degree_zero_part(a_);
    if (!jacobson_radical(a0).basis.empty()) return result(false, "field", "A_0 has a nonzero radical");
    std::vector<Element> all;
    for (std::size_t i = 0; i < a0.dim(); ++i) all.push_back(a0.basis_element(i));
    return result(primitive_idempotents(a0, all).size() == 1, "field", "A_0 is reduced with a single block");
  }

  CertificateCheck not_field(const Json& c) const {
    auto idx0 = degree_zero_indices(a_);
    if (c.contains("nilpotent")) {
      auto x = vec(c.at("nilpotent"));
      auto p = x;
      for (std::size_t i = 0; i <= a_.dim() && !d_.is_zero(p); ++i) p = d_.mul(p, x);
      return result(!d_.is_zero(x) && d_.is_zero(p), "not-a-field", "A_0 contains a nonzero nilpotent");
    }
    if (c.contains("idempotent")) {
      auto e = vec(c.at("idempotent"));
      bool ok = d_.mul(e, e) == e && !d_.is_zero(e) && e != d_.unit();
      return result(ok, "not-a-field", "A_0 contains a nontrivial idempotent");
    }
    return {CertificateStatus::unchecked, "not-a-field", "no witness element"};
  }

  CertificateCheck centre_extra(const Json& c) const {
    auto z = vec(c.at("element"));
    for (std::size_t x = 0; x < a_.dim(); ++x)
      if (d_.mul(z, d_.basis(x)) != d_.mul(d_.basis(x), z))
        return result(false, "centre-exceeds-base", "the element is not central");
    EchelonBasis<K> base(f_, a_.dim());
    for (const auto& e : a_.base_or_ground().elements) base.insert(d_.to_vec(e));
    return result(!base.contains(z), "centre-exceeds-base", "a central element outside the base");
  }

  CertificateCheck shift_iso(const Json& c) const {
    if (!c.contains("witness")) return {CertificateStatus::unchecked, "shift-iso", "no witness matrix"};
    auto w = pattern_from_json(a_, c.at("witness"));
    auto r = verify_shift_witness(a_, w);
    if (!r.yes()) return result(false, "shift-iso", r.reason);
    if (c.contains("inverse")) {
      auto inv = pattern_from_json(a_, c.at("inverse"));
      auto p = pattern_product(a_, w, inv);
      auto q = pattern_product(a_, inv, w);
      bool ok = pattern_check(a_, inv) && p.entries == PatternMatrix::identity(a_, w.row_shifts).entries &&
                q.entries == PatternMatrix::identity(a_, w.col_shifts).entries;
      return result(ok, "shift-iso", "degree-patterned matrix with a two-sided inverse");
    }
    return result(true, "shift-iso", "degree-patterned invertible matrix");
  }

  CertificateCheck free_basis(const Json& c) const {
    auto base = a_.base_or_ground().elements;
    EchelonBasis<K> span(f_, a_.dim());
    for (const auto& e : c.at("basis")) {
      auto v = vec(e);
      if (!homogeneous(v)) return result(false, "free-basis", "a basis element is not homogeneous");
      for (const auto& r : base)
        if (!span.insert(d_.mul(d_.to_vec(r), v))) return result(false, "free-basis", "not independent over R");
    }
    return result(span.dim() == a_.dim(), "free-basis",
                  "homogeneous R-basis of rank " + std::to_string(c.at("basis").size()));
  }

  CertificateCheck azumaya(const Json& c) const {
    auto idx = c.at("basis").get<std::vector<std::size_t>>();
    PsiMatrix psi;
    try {
      psi = psi_matrix(a_, idx);
    } catch (const DomainError& e) {
      return result(false, "graded-azumaya", e.what());
    }
    return result(psi.bijective && psi.degree_preserving, "graded-azumaya",
                  "psi has full rank " + std::to_string(psi.k_rank) + " and preserves degrees");
  }

  bool one_in_product(const GroupElement& g) const {
    auto comps = a_.components();
    auto it = comps.find(g), jt = comps.find(a_.group().neg(g));
    EchelonBasis<K> span(f_, a_.dim());
    if (it != comps.end() && jt != comps.end())
      for (auto x : it->second)
        for (auto y : jt->second) span.insert(d_.mul(d_.basis(x), d_.basis(y)));
    return span.contains(d_.unit());
  }

  const GradedAlgebra& a_;
  K f_;
  DenseAlgebra<K> d_;
};

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ParseError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = j[r][c];
      if (v.is_string())
        m(r, c) = mpz_class(v.get<std::string>());
      else
        m(r, c) = mpz_class(std::to_string(v.get<long long>()));
    }
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
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

bool unimodular(const IntMatrix& m) {
  auto d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::verified: return "verified";
    case CertificateStatus::refuted: return "refuted";
    default: return "unchecked";
  }
}

Json CertificateCheck::to_json() const { return {{"status", to_string(status)}, {"kind", kind}, {"detail", detail}}; }

CertificateCheck verify_certificate(const GradedAlgebra& a, const Json& certificate) {
  if (!certificate.is_object() || !certificate.contains("kind"))
    return {CertificateStatus::unchecked, "", "no certificate"};
  if (certificate.at("kind") == "smith-form") return verify_smith_certificate(certificate);
  try {
    return with_field(a.field(), [&](auto K) { return Checker<decltype(K)>(a, K).check(certificate); });
  } catch (const ParseError& e) {
    return result(false, certificate.at("kind").get<std::string>(), std::string("malformed witness: ") + e.what());
  } catch (const Json::exception& e) {
    return result(false, certificate.at("kind").get<std::string>(), std::string("malformed witness: ") + e.what());
  }
}

Json smith_certificate(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  return {{"kind", "smith-form"},
          {"matrix", matrix_to_json(m)},
          {"u", matrix_to_json(s.u)},
          {"d", matrix_to_json(s.d)},
          {"v", matrix_to_json(s.v)}};
}

CertificateCheck verify_smith_certificate(const Json& c) {
  auto m = matrix_from_json(c.at("matrix"));
  auto u = matrix_from_json(c.at("u"));
  auto d = matrix_from_json(c.at("d"));
  auto v = matrix_from_json(c.at("v"));
  if (u.rows() != m.rows() || u.cols() != m.rows() || v.rows() != m.cols() || v.cols() != m.cols() ||
      d.rows() != m.rows() || d.cols() != m.cols())
    return result(false, "smith-form", "shape mismatch");
  if (!unimodular(u) || !unimodular(v)) return result(false, "smith-form", "U or V is not unimodular");
  if (!(u * m * v == d)) return result(false, "smith-form", "U M V != D");
  mpz_class prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t col = 0; col < d.cols(); ++col) {
      if (r != col) {
        if (d(r, col) != 0) return result(false, "smith-form", "D is not diagonal");
        continue;
      }
      const auto& x = d(r, col);
      if (x < 0) return result(false, "smith-form", "negative diagonal entry");
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0) return result(false, "smith-form", "diagonal entries do not divide in order");
      prev = x;
    }
  return result(true, "smith-form", "U M V = D with unimodular U, V and a divisibility chain on D");
}

Json azumaya_certificate(const AzumayaReport& r) {
  if (r.verdict != Truth::yes || !r.psi) return r.faithfully_projective.certificate;
  std::vector<std::size_t> idx;
  for (const auto& e : r.psi->basis) {
    std::size_t pos = e.size(), count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        pos = i;
        ++count;
      }
    if (count != 1 || e[pos] != 1) return r.faithfully_projective.certificate;
    idx.push_back(pos);
  }
  return {{"kind", "graded-azumaya"}, {"basis", idx}, {"k_rank", r.psi->k_rank}};
}

}  // namespace gradalg
