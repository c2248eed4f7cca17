#pragma once

// JSON and DOT serialization for the library's value types, plus small file
// helpers.  Schemas (all parsers throw BadInput on malformed content; every
// serialize/parse pair round-trips exactly):
//
//   rational        [numerator, denominator] — 64-bit JSON integers when the
//                   parts fit, decimal strings otherwise; denominator > 0
//   matrix          {"n": int, "entries": [rational, ...]} — row-major upper
//                   triangle including the diagonal, length n(n+1)/2
//   graph           {"vertices": [label, ...],
//                    "edges": [[u, v], ...]} — 0-based indices, u < v
//   decomposition   {"n": int,
//                    "terms": [{"weight": rational, "v": [rational, ...]}]}
//   certificate     one key per filled BoundCertificate field; absent
//                   optional parts are omitted
//
// DOT output is the plain undirected subset: one "vK [label="..."];" line
// per vertex and one "vA -- vB;" line per edge.

#include "copos/case_engine.hpp"
#include "copos/cp_decomp.hpp"
#include "copos/graph.hpp"
#include "copos/index_set.hpp"
#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

#include "json.hpp"

#include <string>

namespace copos {

nlohmann::json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const VecR& v);
VecR vector_from_json(const nlohmann::json& j);

nlohmann::json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const SymMatrix& a);
SymMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const WeightedCpDecomposition& dec);
WeightedCpDecomposition decomposition_from_json(const nlohmann::json& j);

Strategy strategy_from_string(const std::string& s);

nlohmann::json certificate_to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TheoremReport& report);

// DOT text for an undirected labeled graph; `name` must be a valid DOT
// identifier (letters, digits, underscores).
std::string graph_to_dot(const LabeledGraph& g, const std::string& name = "G");

// Parses the DOT subset emitted by graph_to_dot (plus bare edges between
// previously unnamed vertices, which become their own labels).
LabeledGraph graph_from_dot(const std::string& text);

std::string read_text_file(const std::string& path);
nlohmann::json load_json_file(const std::string& path);

}  // namespace copos
