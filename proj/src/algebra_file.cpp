#include "gradalg/algebra_file.hpp"

#include <fstream>
#include <sstream>

#include "gradalg/constructions.hpp"
#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError("field '" + path + "': " + msg);
}

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

long as_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t as_index(const Json& j, const std::string& path, std::size_t bound) {
  long v = as_long(j, path);
  if (v < 0 || static_cast<std::size_t>(v) >= bound) fail(path, "index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

mpz_class integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(path, "not an integer string");
    return z;
  }
  fail(path, "expected an integer");
}

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpq_class rational_at(const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "expected [numerator, denominator]");
    mpz_class num = integer_from_json(j[0], path + "[0]");
    mpz_class den = integer_from_json(j[1], path + "[1]");
    if (den == 0) fail(path, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  return mpq_class(integer_from_json(j, path));
}

Element element_at(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != dim) fail(path, "expected an array of " + std::to_string(dim) + " coefficients");
  Element e(dim);
  for (std::size_t i = 0; i < dim; ++i) e[i] = rational_at(j[i], path + "[" + std::to_string(i) + "]");
  return e;
}

GroupElement group_element_at(const GradeGroup& g, const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != g.rank())
    fail(path, "expected a degree with " + std::to_string(g.rank()) + " coordinates");
  std::vector<long> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(as_long(j[i], path + "[" + std::to_string(i) + "]"));
  return g.element(std::move(c));
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

Json field_to_json(const FieldSpec& k) { return k.name(); }

FieldSpec field_from_name(const std::string& name) {
  if (name == "Q") return FieldSpec::rationals();
  if (name.size() > 1 && name[0] == 'F') {
    try {
      return FieldSpec::prime_field(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    } catch (const std::logic_error&) {
    }
  }
  throw ParseError("unknown field '" + name + "' (expected Q or F<p>)");
}

Json group_to_json(const GradeGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

GradeGroup group_from_json(const Json& j) {
  long f = as_long(need(j, "free_rank", "grade_group"), "grade_group.free_rank");
  if (f < 0) fail("grade_group.free_rank", "must be non-negative");
  const Json& t = need(j, "torsion", "grade_group");
  if (!t.is_array()) fail("grade_group.torsion", "expected an array");
  std::vector<long> torsion;
  for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(as_long(t[i], "grade_group.torsion"));
  try {
    return GradeGroup(static_cast<std::size_t>(f), torsion);
  } catch (const DomainError& e) {
    fail("grade_group", e.what());
  }
}

GroupElement element_from_json(const GradeGroup& g, const Json& j) { return group_element_at(g, j, "degree"); }

Json rational_to_json(const mpq_class& q) { return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }
mpq_class rational_from_json(const Json& j) { return rational_at(j, "value"); }

Json element_to_json(const Element& e) {
  Json out = Json::array();
  for (const auto& c : e) out.push_back(rational_to_json(c));
  return out;
}
Element element_from_json(const Json& j, std::size_t dim) { return element_at(j, dim, "element"); }

Json to_json(const GradedAlgebra& a) {
  Json j;
  if (a.field().is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = "Fp";
    j["p"] = a.field().characteristic;
  }
  j["grade_group"] = group_to_json(a.group());
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree.coords}});
  j["basis"] = basis;
  Json st = Json::array();
  for (const auto& s : a.table())
    st.push_back({s.i, s.j, s.k, integer_to_json(s.value.get_num()), integer_to_json(s.value.get_den())});
  j["structure"] = st;
  j["unit"] = element_to_json(a.unit());
  if (a.base()) {
    Json base = Json::array();
    for (const auto& e : a.base()->elements) {
      std::optional<std::size_t> index;
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
          ++nonzero;
          if (e[i] == 1) index = i;
        }
      if (nonzero == 1 && index) base.push_back(*index);
      else base.push_back(element_to_json(e));
    }
    j["base"] = base;
  }
  if (!a.provenance().is_null()) j["provenance"] = a.provenance();
  return j;
}

GradedAlgebra from_json(const Json& j) {
  if (!j.is_object()) fail("", "document must be an object");
  const Json& fj = need(j, "field", "");
  if (!fj.is_string()) fail("field", "expected \"Q\" or \"Fp\"");
  FieldSpec k;
  std::string fname = fj.get<std::string>();
  if (fname == "Q") {
    k = FieldSpec::rationals();
  } else if (fname == "Fp") {
    long p = as_long(need(j, "p", ""), "p");
    try {
      k = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
    } catch (const DomainError& e) {
      fail("p", e.what());
    }
  } else {
    fail("field", "expected \"Q\" or \"Fp\", got \"" + fname + "\"");
  }
  GradeGroup g = group_from_json(need(j, "grade_group", ""));

  const Json& bj = need(j, "basis", "");
  if (!bj.is_array() || bj.empty()) fail("basis", "expected a nonempty array");
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    std::string p = "basis[" + std::to_string(i) + "]";
    const Json& name = need(bj[i], "name", p);
    if (!name.is_string()) fail(p + ".name", "expected a string");
    basis.push_back({name.get<std::string>(), group_element_at(g, need(bj[i], "degree", p), p + ".degree")});
  }
  const std::size_t n = basis.size();

  const Json& sj = need(j, "structure", "");
  if (!sj.is_array()) fail("structure", "expected an array");
  std::vector<StructureConstant> table;
  for (std::size_t t = 0; t < sj.size(); ++t) {
    std::string p = "structure[" + std::to_string(t) + "]";
    const Json& e = sj[t];
    if (!e.is_array() || e.size() != 5) fail(p, "expected [i, j, k, numerator, denominator]");
    StructureConstant s;
    s.i = as_index(e[0], p + "[0]", n);
    s.j = as_index(e[1], p + "[1]", n);
    s.k = as_index(e[2], p + "[2]", n);
    s.value = rational_at(Json::array({e[3], e[4]}), p);
    table.push_back(std::move(s));
  }
  Element unit = element_at(need(j, "unit", ""), n, "unit");
  GradedAlgebra a;
  try {
    a = GradedAlgebra(k, g, std::move(basis), std::move(table), std::move(unit));
  } catch (const DomainError& e) {
    fail("", e.what());
  }
  if (auto it = j.find("base"); it != j.end()) {
    if (!it->is_array()) fail("base", "expected an array");
    DesignatedBase base;
    for (std::size_t t = 0; t < it->size(); ++t) {
      std::string p = "base[" + std::to_string(t) + "]";
      const Json& e = (*it)[t];
      if (e.is_number_integer()) base.elements.push_back(a.basis_element(as_index(e, p, n)));
      else base.elements.push_back(element_at(e, n, p));
    }
    a = a.with_base(std::move(base));
  }
  if (auto it = j.find("provenance"); it != j.end()) a = a.with_provenance(*it);
  return a;
}

std::string emit(const GradedAlgebra& a) { return to_json(a).dump(2) + "\n"; }

GradedAlgebra parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  return from_json(j);
}

GradedAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void save_algebra(const GradedAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << emit(a);
}

GradedAlgebra reconstruct(const Json& p) {
  const std::string kind = need(p, "kind", "provenance").get<std::string>();
  auto field = [&] { return field_from_name(need(p, "field", "provenance").get<std::string>()); };
  auto group = [&] { return group_from_json(need(p, "grade_group", "provenance")); };
  auto inner = [&](const char* key) { return from_json(need(p, key, "provenance")); };
  if (kind == "ground-field") return ground_field(field(), group());
  if (kind == "group-algebra") return group_algebra(field(), group());
  if (kind == "finite-group-algebra") {
    const Json& gj = need(p, "group", "provenance");
    auto table = need(gj, "table", "provenance.group").get<std::vector<std::vector<std::size_t>>>();
    return group_algebra(field(), FiniteGroup(need(gj, "name", "provenance.group").get<std::string>(), table));
  }
  if (kind == "twisted") {
    Cocycle c{group(), {}};
    for (const auto& v : need(p, "cocycle", "provenance")) c.values.push_back(rational_at(v, "provenance.cocycle"));
    return twisted_group_algebra(field(), c);
  }
  if (kind == "quaternion")
    return quaternion_algebra(field(), rational_at(need(p, "a", "provenance"), "provenance.a"),
                              rational_at(need(p, "b", "provenance"), "provenance.b"));
  if (kind == "upper-triangular") {
    auto g = group();
    return upper_triangular(field(), g, group_element_at(g, need(p, "degree", "provenance"), "provenance.degree"));
  }
  if (kind == "split-product") return split_product(field(), group(), need(p, "copies", "provenance").get<std::size_t>());
  if (kind == "matrix-shift") {
    auto a = inner("algebra");
    std::vector<GroupElement> shifts;
    for (const auto& s : need(p, "shifts", "provenance")) shifts.push_back(group_element_at(a.group(), s, "provenance.shifts"));
    return matrix_shift(a, shifts);
  }
  if (kind == "tensor") return tensor_product(inner("left"), inner("right"));
  if (kind == "tensor-over-base") return tensor_product_over_base(inner("left"), inner("right"));
  if (kind == "opposite") return opposite(inner("algebra"));
  if (kind == "regrade") {
    auto a = inner("algebra");
    auto g = group();
    std::vector<GroupElement> images;
    for (const auto& s : need(p, "images", "provenance")) images.push_back(group_element_at(g, s, "provenance.images"));
    return regrade(a, g, images);
  }
  throw ParseError("unknown provenance kind '" + kind + "'");
}

}  // namespace gradalg
