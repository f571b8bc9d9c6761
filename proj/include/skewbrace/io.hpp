#pragma once

#include <string>

#include <json.hpp>

#include "skewbrace/catalog.hpp"
#include "skewbrace/classify.hpp"

namespace skewbrace {

using json = nlohmann::ordered_json;

// Throws ParseError on malformed documents. Validation problems in the
// contents surface later, from build_brace.
BraceSpec parse_brace_spec(const json& doc);
BraceSpec parse_brace_spec_text(const std::string& text);
BraceSpec read_brace_file(const std::string& path);
json read_json_file(const std::string& path);

// {"kind": "tables", "dot": [[...]], "circ": [[...]]}
json tables_json(const SkewBrace& a);
Table parse_table(const json& j, const char* what);

// Sorted index array for table braces; for formula braces the order and a
// generating set as [b-vector, c-vector] pairs.
json set_json(const SkewBrace& a, const ElementSet& s);
json element_json(const SkewBrace& a, Elem x);
json chain_json(const SkewBrace& a, const SeriesChain& c);
json profile_json(const NilpotencyProfile& p);
json theorem_json(const TheoremReport& r);
json inclusion_json(const SkewBrace& a, const InclusionResult& r);
json identity_json(const IdentityReport& r);
json counterexample_json(const SkewBrace& a, const CounterexampleReport& r);

// Indented plain-text rendering of a report object.
std::string render_text(const json& j);

}  // namespace skewbrace
