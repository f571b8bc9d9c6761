#include "skewbrace/io.hpp"

#include <fstream>
#include <sstream>

namespace skewbrace {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::uint32_t uint_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    parse_fail(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint32_t>();
}

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix parse_matrix(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim)
    parse_fail(std::string(what) + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim)
      parse_fail(std::string(what) + " rows must have length " + std::to_string(dim));
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) parse_fail(std::string(what) + " entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<Matrix> parse_matrices(const json& j, std::size_t count, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != count)
    parse_fail(std::string(what) + " must list " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (const auto& m : j) out.push_back(parse_matrix(m, dim, what));
  return out;
}

Table parse_group_field(const json& doc) {
  const json& g = field(doc, "group");
  if (g.is_string()) {
    try {
      return builtin_group(g.get<std::string>()).rows();
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }
  return parse_table(g, "group");
}

}  // namespace

Table parse_table(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) parse_fail(std::string(what) + " must be a non-empty array of rows");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail(std::string(what) + " rows must be arrays");
    std::vector<Elem> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        parse_fail(std::string(what) + " entries must be non-negative integers");
      r.push_back(v.get<Elem>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

BraceSpec parse_brace_spec(const json& doc) {
  const json& kind_j = field(doc, "kind");
  if (!kind_j.is_string()) parse_fail("field 'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "tables") return TablesSpec{parse_table(field(doc, "dot"), "dot"), parse_table(field(doc, "circ"), "circ")};
  if (kind == "trivial") return TrivialSpec{parse_group_field(doc)};
  if (kind == "almost_trivial") return AlmostTrivialSpec{parse_group_field(doc)};
  if (kind == "radical_ring")
    return RadicalRingSpec{parse_table(field(doc, "add"), "add"), parse_table(field(doc, "mult"), "mult")};
  if (kind == "pq") {
    const json& v = field(doc, "variant");
    if (!v.is_string() || (v != "i" && v != "ii")) parse_fail("field 'variant' must be \"i\" or \"ii\"");
    return PqSpec{uint_field(doc, "p"), uint_field(doc, "q"), uint_field(doc, "k"),
                  v == "i" ? PqVariant::i : PqVariant::ii};
  }
  if (kind == "bc") {
    BcSpec s;
    s.p = uint_field(doc, "p");
    s.dim_b = uint_field(doc, "d_B");
    s.dim_c = uint_field(doc, "d_C");
    s.phi = parse_matrices(field(doc, "phi"), s.dim_c, s.dim_b, "phi");
    s.psi = parse_matrices(field(doc, "psi"), s.dim_b, s.dim_c, "psi");
    return s;
  }
  if (kind == "counterexample_F") return CounterexampleSpec{uint_field(doc, "p")};
  parse_fail("unknown brace kind '" + kind + "'");
}

BraceSpec parse_brace_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_brace_spec(doc);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

BraceSpec read_brace_file(const std::string& path) { return parse_brace_spec(read_json_file(path)); }

json tables_json(const SkewBrace& a) {
  json j;
  j["kind"] = "tables";
  j["dot"] = a.dot_rows();
  j["circ"] = a.circ_rows();
  return j;
}

json element_json(const SkewBrace& a, Elem x) {
  if (const FormulaBrace* f = a.formula()) {
    auto [b, c] = f->decode(x);
    return json::array({b, c});
  }
  return x;
}

json set_json(const SkewBrace& a, const ElementSet& s) {
  if (a.is_table_backed()) return s.members();
  json j;
  j["order"] = s.size();
  json gens = json::array();
  for (Elem g : dot_generators_of(a, s)) gens.push_back(element_json(a, g));
  j["generators"] = gens;
  return j;
}

json chain_json(const SkewBrace& a, const SeriesChain& c) {
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["first_index"] = c.first_index;
  json terms = json::array();
  for (const auto& t : c.terms) terms.push_back(set_json(a, t));
  j["terms"] = terms;
  json orders = json::array();
  for (const auto& t : c.terms) orders.push_back(t.size());
  j["orders"] = orders;
  j["stabilized_at"] = c.stabilized_at;
  j["reaches_terminal"] = c.reaches_terminal;
  if (c.truncated) j["truncated"] = true;
  return j;
}

namespace {
json opt_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }
}  // namespace

json profile_json(const NilpotencyProfile& p) {
  json j;
  j["left"] = opt_json(p.left);
  j["right"] = opt_json(p.right);
  j["socle"] = opt_json(p.socle);
  j["annihilator"] = opt_json(p.annihilator);
  j["add_group"] = opt_json(p.add_group);
  j["mult_group"] = opt_json(p.mult_group);
  j["smoktunowicz"] = opt_json(p.smoktunowicz);
  return j;
}

json theorem_json(const TheoremReport& r) {
  json j = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["check"] = c.name;
    if (c.skipped) {
      e["skipped"] = true;
    } else {
      e["lhs"] = c.lhs;
      e["rhs"] = c.rhs;
      e["agree"] = c.agree;
    }
    e["detail"] = c.detail;
    j.push_back(e);
  }
  return j;
}

json inclusion_json(const SkewBrace& a, const InclusionResult& r) {
  json j;
  j["check"] = std::string("inclusion_") + to_char(r.label);
  j["formula"] = inclusion_formula(r.label);
  j["inputs"] = {{"n", r.n}, {"k", r.k}};
  j["holds"] = r.holds;
  if (r.witness) {
    j["witness"] = {{"x", element_json(a, r.witness->x)},
                    {"y", element_json(a, r.witness->y)},
                    {"value", element_json(a, r.witness->value)}};
  }
  j["star_set"] = set_json(a, r.star_set);
  return j;
}

json identity_json(const IdentityReport& r) {
  json j;
  j["passed"] = r.passed;
  j["triples_checked"] = r.triples_checked;
  if (!r.passed) {
    j["failed_identity"] = r.failed_identity;
    j["witness"] = r.witness;
  }
  return j;
}

json counterexample_json(const SkewBrace& a, const CounterexampleReport& r) {
  json j;
  j["p"] = r.p;
  j["order"] = r.order;
  j["validated"] = r.validated;
  j["right_2"] = set_json(a, r.right2);
  j["right_2_matches"] = r.right2_matches;
  j["right_3"] = set_json(a, r.right3);
  j["right_3_matches"] = r.right3_matches;
  j["annihilator_orders"] = r.ann_orders;
  j["ann_3_contains_e1e2e3_squared"] = r.ann3_contains_expected;
  j["star_e3_e2"] = element_json(a, r.star_value);
  j["star_matches"] = r.star_matches;
  j["inclusion_E"] = inclusion_json(a, r.inclusion_e);
  j["inclusion_F"] = inclusion_json(a, r.inclusion_f);
  j["passed"] = r.passed();
  return j;
}

namespace {

bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !is_flat(e))) return false;
  return true;
}

void render(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_flat(v))) {
        out << pad << k << ":\n";
        render(v, indent + 1, out);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array() && !is_flat(j)) {
    std::size_t i = 0;
    for (const auto& v : j) {
      out << pad << "- [" << i++ << "]\n";
      render(v, indent + 1, out);
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace skewbrace
