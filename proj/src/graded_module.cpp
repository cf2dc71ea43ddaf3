#include "gradalg/graded_module.hpp"

#include <algorithm>
#include <functional>

#include "gradalg/algebra_file.hpp"
#include "gradalg/detail/dense_algebra.hpp"

namespace gradalg {

using detail::DenseAlgebra;

std::optional<GroupElement> ShiftedFreeModule::homogeneous_degree(const ModuleVector& v) const {
  if (v.size() != rank()) throw StructuralError("module vector has the wrong length");
  std::optional<GroupElement> deg;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (algebra.is_zero(v[j])) continue;
    auto dj = algebra.homogeneous_degree(v[j]);
    if (!dj) return std::nullopt;
    auto g = algebra.group().add(*dj, basis_degree(j));
    if (deg && *deg != g) return std::nullopt;
    deg = g;
  }
  return deg;
}

PatternMatrix PatternMatrix::zero(const GradedAlgebra& a, std::vector<GroupElement> d, std::vector<GroupElement> alpha) {
  PatternMatrix m;
  m.entries.assign(d.size() * alpha.size(), a.zero());
  m.row_shifts = std::move(d);
  m.col_shifts = std::move(alpha);
  return m;
}

PatternMatrix PatternMatrix::identity(const GradedAlgebra& a, std::vector<GroupElement> d) {
  auto m = zero(a, d, d);
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = a.unit();
  return m;
}

GroupElement pattern_degree(const GradeGroup& g, const PatternMatrix& m, std::size_t i, std::size_t j) {
  return g.sub(m.col_shifts[j], m.row_shifts[i]);
}

bool pattern_check(const GradedAlgebra& a, const PatternMatrix& m) {
  if (m.entries.size() != m.rows() * m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m.at(i, j);
      if (x.size() != a.dim()) return false;
      if (a.is_zero(x)) continue;
      auto deg = a.homogeneous_degree(x);
      if (!deg || *deg != pattern_degree(a.group(), m, i, j)) return false;
    }
  return true;
}

PatternMatrix pattern_product(const GradedAlgebra& a, const PatternMatrix& x, const PatternMatrix& y) {
  if (x.cols() != y.rows()) throw StructuralError("matrix shapes do not compose");
  auto out = PatternMatrix::zero(a, x.row_shifts, y.col_shifts);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t l = 0; l < y.cols(); ++l)
      for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, l) = a.add(out.at(i, l), a.multiply(x.at(i, j), y.at(j, l)));
  return out;
}

namespace {

// Matrix of v -> r v on column vectors A^n.
template <ExactField K>
Matrix<K> action_matrix(const DenseAlgebra<K>& d, const std::vector<std::vector<typename K::value_type>>& entries,
                        std::size_t n) {
  const std::size_t m = d.dim();
  Matrix<K> big(d.field(), n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (d.is_zero(entries[i * n + j])) continue;
      auto l = d.left_matrix(entries[i * n + j]);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) big(i * m + r, j * m + c) = l(r, c);
    }
  return big;
}

template <ExactField K>
std::optional<PatternMatrix> inverse_impl(const GradedAlgebra& a, const DenseAlgebra<K>& d, const PatternMatrix& r) {
  const std::size_t n = r.rows();
  const std::size_t m = a.dim();
  std::vector<std::vector<typename K::value_type>> entries;
  for (const auto& e : r.entries) entries.push_back(d.to_vec(e));
  auto big = action_matrix(d, entries, n);
  auto s = PatternMatrix::zero(a, r.col_shifts, r.row_shifts);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<typename K::value_type> rhs(n * m, d.field().zero());
    for (std::size_t x = 0; x < m; ++x) rhs[l * m + x] = d.unit()[x];
    auto col = solve(big, rhs);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      s.at(i, l) = d.to_element(std::vector<typename K::value_type>(col->begin() + i * m, col->begin() + (i + 1) * m));
  }
  auto id_rows = PatternMatrix::identity(a, r.row_shifts);
  auto id_cols = PatternMatrix::identity(a, r.col_shifts);
  if (pattern_product(a, r, s).entries != id_rows.entries) return std::nullopt;
  if (pattern_product(a, s, r).entries != id_cols.entries) return std::nullopt;
  return s;
}

}  // namespace

std::optional<PatternMatrix> pattern_inverse(const GradedAlgebra& a, const PatternMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  return with_field(a.field(), [&](auto K) { return inverse_impl(a, DenseAlgebra<decltype(K)>(a, K), m); });
}

Json pattern_to_json(const PatternMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  Json d = Json::array(), al = Json::array();
  for (const auto& x : m.row_shifts) d.push_back(x.coords);
  for (const auto& x : m.col_shifts) al.push_back(x.coords);
  return {{"row_shifts", d}, {"col_shifts", al}, {"entries", rows}};
}

PatternMatrix pattern_from_json(const GradedAlgebra& a, const Json& j) {
  std::vector<GroupElement> d, al;
  for (const auto& x : j.at("row_shifts")) d.push_back(element_from_json(a.group(), x));
  for (const auto& x : j.at("col_shifts")) al.push_back(element_from_json(a.group(), x));
  auto m = PatternMatrix::zero(a, d, al);
  const auto& rows = j.at("entries");
  if (rows.size() != m.rows()) throw ParseError("pattern matrix has the wrong number of rows");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw ParseError("pattern matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = element_from_json(rows[r][c], a.dim());
  }
  return m;
}

Verdict ShiftIsoResult::verdict() const {
  Json cert = {{"kind", "shift-iso"}, {"tier", tier}};
  if (witness) cert["witness"] = pattern_to_json(*witness);
  if (inverse) cert["inverse"] = pattern_to_json(*inverse);
  if (tier == "exhaustive") cert["searched"] = searched;
  return Verdict::make(truth, reason, std::move(cert));
}

namespace {

// Kuhn's augmenting paths; match[j] = row matched to column j.
std::optional<std::vector<std::size_t>> perfect_matching(std::size_t n,
                                                         const std::function<bool(std::size_t, std::size_t)>& ok) {
  const std::size_t none = n;
  std::vector<std::size_t> match(n, none);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!ok(i, j) || seen[j]) continue;
      seen[j] = true;
      if (match[j] == none || augment(match[j], seen)) {
        match[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    if (!augment(i, seen)) return std::nullopt;
  }
  return match;
}

ShiftIsoResult with_witness(const GradedAlgebra& a, PatternMatrix w, std::string tier, std::string reason) {
  ShiftIsoResult r;
  r.inverse = pattern_inverse(a, w);
  if (!r.inverse) throw StructuralError("constructed witness is not invertible");
  r.truth = Truth::yes;
  r.tier = std::move(tier);
  r.reason = std::move(reason);
  r.witness = std::move(w);
  return r;
}

template <ExactField K>
ShiftIsoResult exhaustive_impl(const GradedAlgebra& a, const DenseAlgebra<K>& d, const std::vector<GroupElement>& dd,
                               const std::vector<GroupElement>& alpha, const EnumerationOptions& opts) {
  const std::size_t n = dd.size();
  const std::uint64_t p = a.field().characteristic;
  auto comps = a.components();
  auto zero = PatternMatrix::zero(a, dd, alpha);
  // coordinates of the search: (entry, basis index)
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = comps.find(pattern_degree(a.group(), zero, i, j));
      if (it == comps.end()) continue;
      for (auto b : it->second) coords.emplace_back(i * n + j, b);
    }
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (total > opts.max_enum / p) throw UnsupportedError("exhaustive search space exceeds max_enum");
    total *= p;
  }
  std::vector<std::uint64_t> digit(coords.size(), 0);
  std::vector<std::vector<typename K::value_type>> entries(n * n, d.zero());
  ShiftIsoResult out;
  out.tier = "exhaustive";
  for (std::uint64_t count = 0; count < total; ++count) {
    for (auto& e : entries) std::fill(e.begin(), e.end(), d.field().zero());
    for (std::size_t t = 0; t < coords.size(); ++t) entries[coords[t].first][coords[t].second] = digit[t];
    if (rank(action_matrix(d, entries, n)) == n * a.dim()) {
      auto w = zero;
      for (std::size_t e = 0; e < entries.size(); ++e) w.entries[e] = d.to_element(entries[e]);
      auto r = with_witness(a, std::move(w), "exhaustive", "invertible pattern matrix found by exhaustive search");
      r.searched = count + 1;
      return r;
    }
    for (std::size_t t = 0; t < digit.size(); ++t) {
      if (++digit[t] < p) break;
      digit[t] = 0;
    }
  }
  out.truth = Truth::no;
  out.searched = total;
  out.reason = "no invertible matrix among all " + std::to_string(total) + " pattern matrices";
  return out;
}

}  // namespace

ShiftIsoResult exhaustive_shift_iso(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                                    const std::vector<GroupElement>& alpha, const EnumerationOptions& opts) {
  if (a.field().is_rational()) throw UnsupportedError("exhaustive search needs a finite field");
  if (d.size() != alpha.size()) {
    ShiftIsoResult r;
    r.truth = Truth::no;
    r.tier = "rank";
    r.reason = "ranks differ";
    return r;
  }
  return exhaustive_impl(a, DenseAlgebra<PrimeField>(a, PrimeField{a.field().characteristic}), d, alpha, opts);
}

ShiftIsoResult verify_shift_witness(const GradedAlgebra& a, const PatternMatrix& w) {
  ShiftIsoResult r;
  r.tier = "witness";
  if (!pattern_check(a, w)) {
    r.reason = "witness violates the degree pattern";
    return r;
  }
  auto inv = pattern_inverse(a, w);
  if (!inv) {
    r.reason = "witness is not invertible";
    return r;
  }
  r.truth = Truth::yes;
  r.reason = "witness is an invertible pattern matrix";
  r.witness = w;
  r.inverse = std::move(inv);
  return r;
}

ShiftIsoResult is_shift_iso(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                            const std::vector<GroupElement>& alpha, const EnumerationOptions& opts) {
  const auto& g = a.group();
  for (const auto& x : d)
    if (!g.contains(x)) throw StructuralError("shift " + g.format(x) + " lies outside " + g.describe());
  for (const auto& x : alpha)
    if (!g.contains(x)) throw StructuralError("shift " + g.format(x) + " lies outside " + g.describe());
  if (d.size() != alpha.size()) {
    ShiftIsoResult r;
    r.truth = Truth::no;
    r.tier = "rank";
    r.reason = "ranks differ: dimensions " + std::to_string(d.size() * a.dim()) + " and " +
               std::to_string(alpha.size() * a.dim());
    return r;
  }
  const std::size_t n = d.size();

  // alpha is a rearrangement of d
  if (auto m = perfect_matching(n, [&](std::size_t i, std::size_t j) { return d[i] == alpha[j]; })) {
    auto w = PatternMatrix::zero(a, d, alpha);
    for (std::size_t j = 0; j < n; ++j) w.at((*m)[j], j) = a.unit();
    return with_witness(a, std::move(w), "permutation", "shifts agree up to order");
  }

  if (is_graded_division_ring(a, opts).yes()) {
    auto comps = a.components();
    std::vector<GroupElement> supp;
    for (const auto& [deg, idx] : comps) supp.push_back(deg);
    Subgroup star(g, supp);
    auto allowed = [&](std::size_t i, std::size_t j) { return star.contains(g.sub(alpha[j], d[i])); };
    if (auto m = perfect_matching(n, allowed)) {
      auto w = PatternMatrix::zero(a, d, alpha);
      for (std::size_t j = 0; j < n; ++j) {
        auto it = comps.find(g.sub(alpha[j], d[(*m)[j]]));
        w.at((*m)[j], j) = a.basis_element(it->second.front());
      }
      return with_witness(a, std::move(w), "matching",
                          "graded division ring: shifts match modulo the invertible support");
    }
    ShiftIsoResult r;
    r.truth = Truth::no;
    r.tier = "matching";
    r.reason = "graded division ring: no matching of shifts modulo the invertible support";
    return r;
  }

  if (!a.field().is_rational()) {
    try {
      return exhaustive_shift_iso(a, d, alpha, opts);
    } catch (const UnsupportedError&) {
    }
  }
  ShiftIsoResult r;
  r.tier = "none";
  r.reason = "no decision tier applies: not a graded division ring and exhaustive search unavailable";
  return r;
}

ShiftIsoResult gamma_star_membership(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                                     const EnumerationOptions& opts) {
  return is_shift_iso(a, d, std::vector<GroupElement>(d.size(), a.group().zero()), opts);
}

namespace {

ModuleVector left_scale(const GradedAlgebra& a, const Element& x, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& c : v) out.push_back(a.multiply(x, c));
  return out;
}

ModuleVector subtract(const GradedAlgebra& a, const ModuleVector& v, const ModuleVector& w) {
  ModuleVector out;
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(a.add(v[j], a.scale(-1, w[j])));
  return out;
}

struct Elimination {
  std::vector<ModuleVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> independent;  // input positions that produced rows
};

// Homogeneous Gaussian elimination over a graded division ring. Dependent
// inputs either throw (strict) or are skipped.
Elimination eliminate(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                      const std::vector<ModuleVector>& vectors, bool strict) {
  ShiftedFreeModule mod{d, shifts};
  const std::size_t k = vectors.size();
  Elimination e;
  std::vector<ModuleVector> combos;  // row r = sum combos[r][l] * vectors[l]
  for (std::size_t in = 0; in < k; ++in) {
    const auto& v = vectors[in];
    if (v.size() != shifts.size()) throw StructuralError("module vector has the wrong length");
    bool zero = std::all_of(v.begin(), v.end(), [&](const Element& x) { return d.is_zero(x); });
    if (!zero && !mod.homogeneous_degree(v)) throw DomainError("vector " + std::to_string(in) + " is not homogeneous");
    ModuleVector w = v;
    ModuleVector combo(k, d.zero());
    combo[in] = d.unit();
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const auto c = w[e.pivots[r]];
      if (d.is_zero(c)) continue;
      w = subtract(d, w, left_scale(d, c, e.rows[r]));
      combo = subtract(d, combo, left_scale(d, c, combos[r]));
    }
    std::size_t q = 0;
    while (q < w.size() && d.is_zero(w[q])) ++q;
    if (q == w.size()) {
      if (!strict) continue;
      Json coeffs = Json::array();
      for (const auto& c : combo) coeffs.push_back(element_to_json(c));
      throw DependencyError("vector " + std::to_string(in) + " depends on the earlier vectors",
                            {{"kind", "dependency"}, {"index", in}, {"coefficients", coeffs}});
    }
    auto inv = inverse_of(d, w[q]);
    if (!inv) throw HypothesisError("nonzero homogeneous element without inverse: not a graded division ring");
    e.rows.push_back(left_scale(d, *inv, w));
    combos.push_back(left_scale(d, *inv, combo));
    e.pivots.push_back(q);
    e.independent.push_back(in);
  }
  return e;
}

void require_division(const GradedAlgebra& d) {
  if (is_graded_division_ring(d).no()) throw HypothesisError("algebra is not a graded division ring");
}

ModuleVector standard(const GradedAlgebra& d, std::size_t m, std::size_t j) {
  ModuleVector v(m, d.zero());
  v[j] = d.unit();
  return v;
}

std::vector<std::size_t> complement_order(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                                          const std::vector<std::size_t>& pivots) {
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < shifts.size(); ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.push_back(j);
  std::stable_sort(free.begin(), free.end(), [&](std::size_t x, std::size_t y) {
    return d.group().neg(shifts[x]) < d.group().neg(shifts[y]);
  });
  return free;
}

}  // namespace

HomogeneousBasis extend_homogeneous_basis(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                                          const std::vector<ModuleVector>& vectors) {
  require_division(d);
  auto e = eliminate(d, shifts, vectors, true);
  ShiftedFreeModule mod{d, shifts};
  HomogeneousBasis out;
  out.input_count = vectors.size();
  for (const auto& v : vectors) {
    out.vectors.push_back(v);
    out.degrees.push_back(*mod.homogeneous_degree(v));
  }
  for (auto j : complement_order(d, shifts, e.pivots)) {
    out.vectors.push_back(standard(d, shifts.size(), j));
    out.degrees.push_back(mod.basis_degree(j));
  }
  return out;
}

DimensionFormula dimension_formula_check(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                                         const std::vector<ModuleVector>& spanning) {
  require_division(d);
  const std::size_t m = shifts.size();
  auto e = eliminate(d, shifts, spanning, false);
  auto free = complement_order(d, shifts, e.pivots);
  DimensionFormula out;
  out.dim_module = m;
  out.dim_submodule = e.rows.size();
  // ground-field dimensions of N and of N plus the complement
  auto [dim_n, dim_total] = with_field(d.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> da(d, K);
    EchelonBasis<F> span(K, m * d.dim());
    auto add_multiples = [&](const ModuleVector& v) {
      for (std::size_t t = 0; t < d.dim(); ++t) {
        auto w = left_scale(d, d.basis_element(t), v);
        std::vector<typename F::value_type> flat;
        for (const auto& c : w)
          for (const auto& x : c) flat.push_back(K.from_rational(x));
        span.insert(flat);
      }
    };
    for (const auto& v : spanning) add_multiples(v);
    std::size_t dn = span.dim();
    for (auto j : free) add_multiples(standard(d, m, j));
    return std::pair{dn, span.dim()};
  });
  out.dim_quotient = (dim_total - dim_n) / d.dim();
  out.holds = dim_n == out.dim_submodule * d.dim() && dim_total == m * d.dim() &&
              out.dim_submodule + out.dim_quotient == out.dim_module;
  return out;
}

Json MoritaReport::to_json() const {
  return {{"dim_Q_tensor_M_P", dim_qp},
          {"dim_P_tensor_A_Q", dim_pq},
          {"theta_well_defined", theta_well_defined},
          {"theta_prime_well_defined", theta_prime_well_defined},
          {"theta_sigma_identity", theta_sigma},
          {"sigma_theta_identity", sigma_theta},
          {"theta_prime_sigma_prime_identity", theta_prime_sigma_prime},
          {"sigma_prime_theta_prime_identity", sigma_prime_theta_prime},
          {"degrees_preserved", degrees_preserved},
          {"ok", ok()}};
}

}  // namespace gradalg
