#include "copos/io.hpp"

#include "copos/exceptions.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>
#include <utility>

namespace copos {

namespace {

nlohmann::json integer_to_json(const Integer& x) {
    static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
    static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

Integer integer_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw BadInput(std::string(what) + ": not an integer: " + j.dump());
        }
    }
    throw BadInput(std::string(what) + ": expected an integer or decimal string, got " + j.dump());
}

const nlohmann::json& field(const nlohmann::json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw BadInput(std::string(what) + ": missing key \"" + key + "\"");
    return j.at(key);
}

int int_field(const nlohmann::json& j, const char* key, const char* what) {
    const auto& v = field(j, key, what);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw BadInput(std::string(what) + ": key \"" + key + "\" is not an integer");
    return v.get<int>();
}

}  // namespace

nlohmann::json rational_to_json(const Rational& x) {
    return nlohmann::json::array({integer_to_json(numerator(x)), integer_to_json(denominator(x))});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw BadInput("rational: expected [numerator, denominator], got " + j.dump());
    const Integer num = integer_from_json(j[0], "rational numerator");
    const Integer den = integer_from_json(j[1], "rational denominator");
    if (den == 0) throw BadInput("rational: zero denominator");
    return Rational(num) / Rational(den);
}

nlohmann::json vector_to_json(const VecR& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_json(v(i)));
    return arr;
}

VecR vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw BadInput("vector: expected an array of rationals");
    VecR v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
    return v;
}

nlohmann::json index_set_to_json(const IndexSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i : s) arr.push_back(i);
    return arr;
}

IndexSet index_set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw BadInput("index set: expected an array of indices");
    std::vector<int> indices;
    for (const auto& e : j) {
        if (!e.is_number_integer() && !e.is_number_unsigned())
            throw BadInput("index set: non-integer element " + e.dump());
        const int i = e.get<int>();
        if (i < 1) throw BadInput("index set: indices are 1-based, got " + std::to_string(i));
        indices.push_back(i);
    }
    return IndexSet(std::move(indices));
}

nlohmann::json matrix_to_json(const SymMatrix& a) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Rational& x : a.upper_triangle()) entries.push_back(rational_to_json(x));
    return nlohmann::json{{"n", a.size()}, {"entries", std::move(entries)}};
}

SymMatrix matrix_from_json(const nlohmann::json& j) {
    const int n = int_field(j, "n", "matrix");
    if (n < 0) throw BadInput("matrix: negative size");
    const auto& entries = field(j, "entries", "matrix");
    if (!entries.is_array())
        throw BadInput("matrix: \"entries\" is not an array");
    const std::size_t expected = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2;
    if (entries.size() != expected)
        throw BadInput("matrix: expected " + std::to_string(expected) +
                       " upper-triangle entries for n = " + std::to_string(n) + ", got " +
                       std::to_string(entries.size()));
    std::vector<Rational> tri;
    tri.reserve(entries.size());
    for (const auto& e : entries) tri.push_back(rational_from_json(e));
    return SymMatrix::from_upper_triangle(n, tri);
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const std::string& label : g.labels()) vertices.push_back(label);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(nlohmann::json::array({u, v}));
    return nlohmann::json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
    const auto& vertices = field(j, "vertices", "graph");
    if (!vertices.is_array()) throw BadInput("graph: \"vertices\" is not an array");
    std::vector<std::string> labels;
    for (const auto& v : vertices) {
        if (!v.is_string()) throw BadInput("graph: vertex label is not a string: " + v.dump());
        labels.push_back(v.get<std::string>());
    }
    LabeledGraph g(std::move(labels));
    const auto& edges = field(j, "edges", "graph");
    if (!edges.is_array()) throw BadInput("graph: \"edges\" is not an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw BadInput("graph: edge is not a pair of vertex indices: " + e.dump());
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
            throw BadInput("graph: edge endpoints out of range: " + e.dump());
        g.add_edge(u, v);
    }
    return g;
}

nlohmann::json decomposition_to_json(const WeightedCpDecomposition& dec) {
    nlohmann::json terms = nlohmann::json::array();
    for (const CpTerm& t : dec.terms)
        terms.push_back(nlohmann::json{{"weight", rational_to_json(t.weight)},
                                       {"v", vector_to_json(t.v)}});
    return nlohmann::json{{"n", dec.n}, {"terms", std::move(terms)}};
}

WeightedCpDecomposition decomposition_from_json(const nlohmann::json& j) {
    WeightedCpDecomposition dec;
    dec.n = int_field(j, "n", "decomposition");
    if (dec.n < 0) throw BadInput("decomposition: negative size");
    const auto& terms = field(j, "terms", "decomposition");
    if (!terms.is_array()) throw BadInput("decomposition: \"terms\" is not an array");
    for (const auto& t : terms) {
        CpTerm term;
        term.weight = rational_from_json(field(t, "weight", "decomposition term"));
        term.v = vector_from_json(field(t, "v", "decomposition term"));
        if (term.v.size() != dec.n)
            throw BadInput("decomposition: term vector has length " +
                           std::to_string(term.v.size()) + ", expected " + std::to_string(dec.n));
        dec.terms.push_back(std::move(term));
    }
    if (!dec.is_valid())
        throw BadInput("decomposition: terms must have nonnegative nonzero vectors and positive weights");
    return dec;
}

Strategy strategy_from_string(const std::string& s) {
    for (Strategy st : {Strategy::DD, Strategy::LOW_DEGREE, Strategy::OMEGA_SPLIT, Strategy::TF,
                        Strategy::PRUNE_FOREST, Strategy::PRUNE_CUBE, Strategy::PRUNE_HORN,
                        Strategy::H_PLUS_0})
        if (to_string(st) == s) return st;
    throw BadInput("unknown strategy name: " + s);
}

nlohmann::json certificate_to_json(const BoundCertificate& cert) {
    nlohmann::json j;
    j["case_id"] = cert.case_id;
    j["strategy"] = to_string(cert.strategy);
    j["bound"] = cert.bound;
    if (cert.pivot) j["pivot"] = index_set_to_json(*cert.pivot);
    if (cert.pivot_degree >= 0) j["pivot_degree"] = cert.pivot_degree;
    if (cert.member_graph) j["member_graph"] = graph_to_json(*cert.member_graph);
    if (cert.pruned_graph) j["pruned_graph"] = graph_to_json(*cert.pruned_graph);
    if (cert.remainder_graph) j["remainder_graph"] = graph_to_json(*cert.remainder_graph);
    if (cert.tf)
        j["tf"] = nlohmann::json{{"value", cert.tf->value}, {"witness", graph_to_json(cert.tf->witness)}};
    nlohmann::json over = nlohmann::json::array();
    for (const IndexSet& s : cert.over_supports) over.push_back(index_set_to_json(s));
    j["over_supports"] = std::move(over);
    nlohmann::json prune = nlohmann::json::array();
    for (const IndexSet& s : cert.prune_sets) prune.push_back(index_set_to_json(s));
    j["prune_sets"] = std::move(prune);
    nlohmann::json excl = nlohmann::json::array();
    for (const auto& [set, rule] : cert.exclusions)
        excl.push_back(nlohmann::json{{"set", index_set_to_json(set)}, {"rule", rule}});
    j["exclusions"] = std::move(excl);
    j["derivation"] = cert.derivation;
    j["uses_unsettled_fallback"] = cert.uses_unsettled_fallback;
    j["notes"] = cert.notes;
    return j;
}

BoundCertificate certificate_from_json(const nlohmann::json& j) {
    BoundCertificate cert;
    cert.case_id = int_field(j, "case_id", "certificate");
    const auto& strat = field(j, "strategy", "certificate");
    if (!strat.is_string()) throw BadInput("certificate: \"strategy\" is not a string");
    cert.strategy = strategy_from_string(strat.get<std::string>());
    cert.bound = int_field(j, "bound", "certificate");
    if (j.contains("pivot")) cert.pivot = index_set_from_json(j.at("pivot"));
    if (j.contains("pivot_degree")) cert.pivot_degree = j.at("pivot_degree").get<int>();
    if (j.contains("member_graph")) cert.member_graph = graph_from_json(j.at("member_graph"));
    if (j.contains("pruned_graph")) cert.pruned_graph = graph_from_json(j.at("pruned_graph"));
    if (j.contains("remainder_graph")) cert.remainder_graph = graph_from_json(j.at("remainder_graph"));
    if (j.contains("tf")) {
        TfResult tf;
        tf.value = int_field(j.at("tf"), "value", "certificate tf");
        tf.witness = graph_from_json(field(j.at("tf"), "witness", "certificate tf"));
        cert.tf = std::move(tf);
    }
    for (const auto& s : field(j, "over_supports", "certificate"))
        cert.over_supports.push_back(index_set_from_json(s));
    for (const auto& s : field(j, "prune_sets", "certificate"))
        cert.prune_sets.push_back(index_set_from_json(s));
    for (const auto& e : field(j, "exclusions", "certificate")) {
        const auto& rule = field(e, "rule", "certificate exclusion");
        if (!rule.is_string()) throw BadInput("certificate: exclusion rule is not a string");
        cert.exclusions.emplace_back(index_set_from_json(field(e, "set", "certificate exclusion")),
                                     rule.get<std::string>());
    }
    for (const auto& line : field(j, "derivation", "certificate")) {
        if (!line.is_string()) throw BadInput("certificate: derivation line is not a string");
        cert.derivation.push_back(line.get<std::string>());
    }
    const auto& fb = field(j, "uses_unsettled_fallback", "certificate");
    if (!fb.is_boolean()) throw BadInput("certificate: \"uses_unsettled_fallback\" is not a boolean");
    cert.uses_unsettled_fallback = fb.get<bool>();
    for (const auto& note : field(j, "notes", "certificate")) {
        if (!note.is_string()) throw BadInput("certificate: note is not a string");
        cert.notes.push_back(note.get<std::string>());
    }
    return cert;
}

nlohmann::json report_to_json(const TheoremReport& report) {
    nlohmann::json certs = nlohmann::json::array();
    for (const BoundCertificate& c : report.certificates) certs.push_back(certificate_to_json(c));
    nlohmann::json figures = nlohmann::json::array();
    for (const FigureComparison& f : report.figures) {
        nlohmann::json fig{{"name", f.name}, {"case_id", f.case_id}, {"note", f.note}};
        if (f.expected_tf) fig["expected_tf"] = *f.expected_tf;
        if (f.drawing_tf) fig["drawing_tf"] = *f.drawing_tf;
        if (f.definitional_tf) fig["definitional_tf"] = *f.definitional_tf;
        figures.push_back(std::move(fig));
    }
    return nlohmann::json{
        {"certificates", std::move(certs)},
        {"zero_diagonal",
         nlohmann::json{{"cycle_pattern", certificate_to_json(report.zero_diagonal.cycle_pattern)},
                        {"triples_pattern", certificate_to_json(report.zero_diagonal.triples_pattern)}}},
        {"max_bound", report.max_bound},
        {"figures", std::move(figures)},
        {"also_applicable", report.also_applicable},
        {"audit", report.audit},
        {"closing_statement", report.closing_statement},
    };
}

std::string graph_to_dot(const LabeledGraph& g, const std::string& name) {
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw BadInput("graph_to_dot: name must be a DOT identifier, got \"" + name + "\"");
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::string& label = g.label(v);
        if (label.find('"') != std::string::npos || label.find('\\') != std::string::npos)
            throw BadInput("graph_to_dot: label contains a quote or backslash: " + label);
        out << "  v" << v << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

LabeledGraph graph_from_dot(const std::string& text) {
    static const std::regex header_re(R"(^\s*(strict\s+)?graph(\s+\w+)?\s*\{\s*$)");
    static const std::regex vertex_re(R"re(^\s*([\w.]+)\s*\[label\s*=\s*"([^"\\]*)"\s*\]\s*;?\s*$)re");
    static const std::regex edge_re(R"(^\s*([\w.]+)\s*--\s*([\w.]+)\s*;?\s*$)");
    static const std::regex close_re(R"(^\s*\}\s*$)");
    static const std::regex blank_re(R"(^\s*(//.*)?$)");

    LabeledGraph g;
    std::vector<std::pair<std::string, int>> ids;  // DOT id -> vertex index
    auto vertex_for = [&](const std::string& id, const std::string& label) {
        for (const auto& [known, index] : ids)
            if (known == id) return index;
        const int index = g.add_vertex(label);
        ids.emplace_back(id, index);
        return index;
    };

    bool saw_header = false;
    bool saw_close = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::smatch m;
        if (std::regex_match(line, blank_re)) continue;
        if (saw_close) throw BadInput("DOT: content after closing brace at line " + std::to_string(lineno));
        if (!saw_header) {
            if (std::regex_match(line, header_re)) {
                saw_header = true;
                continue;
            }
            throw BadInput("DOT: expected \"graph <name> {\" at line " + std::to_string(lineno));
        }
        if (std::regex_match(line, m, close_re)) {
            saw_close = true;
            continue;
        }
        if (std::regex_match(line, m, vertex_re)) {
            const std::string id = m[1];
            const std::string label = m[2];
            for (const auto& [known, index] : ids)
                if (known == id)
                    throw BadInput("DOT: vertex \"" + id + "\" declared twice (line " +
                                   std::to_string(lineno) + ")");
            vertex_for(id, label);
            continue;
        }
        if (std::regex_match(line, m, edge_re)) {
            const int u = vertex_for(m[1], m[1]);
            const int v = vertex_for(m[2], m[2]);
            if (u == v) throw BadInput("DOT: self-loop at line " + std::to_string(lineno));
            g.add_edge(u, v);
            continue;
        }
        throw BadInput("DOT: unrecognized line " + std::to_string(lineno) + ": " + line);
    }
    if (!saw_header) throw BadInput("DOT: empty input");
    if (!saw_close) throw BadInput("DOT: missing closing brace");
    return g;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw BadInput("cannot read file: " + path);
    return buf.str();
}

nlohmann::json load_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput("cannot parse JSON file " + path + ": " + e.what());
    }
}

}  // namespace copos
