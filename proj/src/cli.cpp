#include "copos/cli.hpp"

#include "copos/case_engine.hpp"
#include "copos/copositive.hpp"
#include "copos/cp_decomp.hpp"
#include "copos/exceptions.hpp"
#include "copos/io.hpp"
#include "copos/matrix_core.hpp"
#include "copos/zero_structure.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace copos {

namespace {

// ---------------------------------------------------------------------------
// text rendering helpers

std::string render_matrix(const MatR& m) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], to_string(m(i, j)).size());
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << "  ";
            out << std::setw(static_cast<int>(width[static_cast<std::size_t>(j)]))
                << to_string(m(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string render_vector(const VecR& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v(i));
    }
    return out + ")";
}

void render_decomposition(const WeightedCpDecomposition& dec, std::ostream& out) {
    out << dec.terms.size() << " rank-one terms on " << dec.n << " indices\n";
    for (std::size_t k = 0; k < dec.terms.size(); ++k) {
        const CpTerm& t = dec.terms[k];
        out << "  term " << (k + 1) << ": weight " << to_string(t.weight) << ", v = "
            << render_vector(t.v) << ", support " << t.support().to_string() << "\n";
    }
}

void render_certificate(const BoundCertificate& cert, std::ostream& out) {
    if (cert.case_id > 0) out << "case " << cert.case_id << "\n";
    out << "strategy: " << to_string(cert.strategy) << "\n";
    out << "cp-rank bound: " << cert.bound << "\n";
    if (cert.pivot) {
        out << "pivot: " << cert.pivot->to_string();
        if (cert.pivot_degree >= 0) out << " (degree " << cert.pivot_degree << ")";
        out << "\n";
    }
    if (!cert.derivation.empty()) {
        out << "derivation:\n";
        for (const std::string& line : cert.derivation) out << "  " << line << "\n";
    }
    if (!cert.notes.empty()) {
        out << "notes:\n";
        for (const std::string& line : cert.notes) out << "  " << line << "\n";
    }
}

// Emits JSON with a trailing newline so shell pipelines see complete lines.
void emit_json(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// input loading

SymMatrix matrix_from_file(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

LabeledGraph graph_from_file(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot")
        return graph_from_dot(read_text_file(path));
    return graph_from_json(load_json_file(path));
}

WeightedCpDecomposition decomposition_from_file(const std::string& path) {
    return decomposition_from_json(load_json_file(path));
}

// For `decomp dd`: the file may hold a matrix or a decomposition to realize.
SymMatrix matrix_or_realization_from_file(const std::string& path) {
    const nlohmann::json j = load_json_file(path);
    if (j.is_object() && j.contains("terms"))
        return SymMatrix(decomposition_from_json(j).realize());
    return matrix_from_json(j);
}

// ---------------------------------------------------------------------------
// subcommand bodies

int cmd_check(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const SymMatrix a = matrix_from_file(path);
    const SimplexMinimum min = simplex_minimum(a);
    const bool copositive = sign_of(min.value) >= 0;
    if (cfg.format == "json") {
        nlohmann::json faces = nlohmann::json::array();
        for (const MinimizingFace& f : min.faces)
            faces.push_back(nlohmann::json{{"face", index_set_to_json(f.face)},
                                           {"witness", vector_to_json(f.witness)}});
        emit_json(nlohmann::json{{"copositive", copositive},
                                 {"minimum", rational_to_json(min.value)},
                                 {"minimizing_faces", std::move(faces)}},
                  out);
    } else {
        out << "minimum of x^T A x over the standard simplex: " << to_string(min.value) << "\n";
        for (const MinimizingFace& f : min.faces)
            out << "  attained on face " << f.face.to_string() << " at "
                << render_vector(f.witness) << "\n";
        out << "copositive: " << (copositive ? "yes" : "no") << "\n";
    }
    return copositive ? 0 : 1;
}

int cmd_zeros(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const SymMatrix a = matrix_from_file(path);
    const std::vector<IndexSet> supports = zero_supports(a);
    const MinimalZeroMatrix mz = minimal_zeros(a);
    if (cfg.format == "json") {
        nlohmann::json sup = nlohmann::json::array();
        for (const IndexSet& s : supports) sup.push_back(index_set_to_json(s));
        nlohmann::json min_sup = nlohmann::json::array();
        nlohmann::json min_zeros = nlohmann::json::array();
        for (std::size_t k = 0; k < mz.supports.size(); ++k) {
            min_sup.push_back(index_set_to_json(mz.supports[k]));
            min_zeros.push_back(nlohmann::json{{"support", index_set_to_json(mz.supports[k])},
                                               {"zero", vector_to_json(mz.columns[k])}});
        }
        emit_json(nlohmann::json{{"zero_supports", std::move(sup)},
                                 {"minimal_supports", std::move(min_sup)},
                                 {"minimal_zeros", std::move(min_zeros)}},
                  out);
    } else {
        out << supports.size() << " zero supports:\n";
        for (const IndexSet& s : supports) {
            out << "  " << s.to_string();
            if (std::find(mz.supports.begin(), mz.supports.end(), s) != mz.supports.end())
                out << "  (minimal)";
            out << "\n";
        }
        out << "minimal zeros, one column per minimal support:\n";
        for (std::size_t k = 0; k < mz.supports.size(); ++k)
            out << "  w" << (k + 1) << " = " << render_vector(mz.columns[k]) << "  support "
                << mz.supports[k].to_string() << "\n";
        out << "W =\n" << render_matrix(mz.as_matrix(a.size()));
    }
    return 0;
}

int cmd_irreducible(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const SymMatrix a = matrix_from_file(path);
    const IrreducibilityRecord rec = irreducibility(a);
    if (cfg.format == "json") {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [ij, flag] : rec.eij)
            pairs.push_back(nlohmann::json{{"i", ij.first}, {"j", ij.second}, {"irreducible", flag}});
        emit_json(nlohmann::json{{"pairs", std::move(pairs)},
                                 {"n_irreducible", rec.n_irreducible},
                                 {"tilde_n_irreducible", rec.tilde_n_irreducible}},
                  out);
    } else {
        for (const auto& [ij, flag] : rec.eij)
            out << "  E(" << ij.first << "," << ij.second << "): " << (flag ? "irreducible" : "reducible")
                << "\n";
        out << "irreducible with respect to every single-entry perturbation: "
            << (rec.n_irreducible ? "yes" : "no") << "\n";
        out << "irreducible with respect to every off-diagonal perturbation: "
            << (rec.tilde_n_irreducible ? "yes" : "no") << "\n";
    }
    return rec.n_irreducible ? 0 : 1;
}

int cmd_tf(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const LabeledGraph g = graph_from_file(path);
    const TfResult tf = tf_exact(g);
    if (cfg.format == "json") {
        emit_json(nlohmann::json{{"value", tf.value}, {"witness", graph_to_json(tf.witness)}}, out);
    } else {
        out << "maximum triangle-free subgraph: " << tf.value << " edges\n";
        out << "witness edges:\n";
        for (const auto& [u, v] : tf.witness.labeled_edges())
            out << "  " << u << " -- " << v << "\n";
    }
    return 0;
}

int cmd_cp_bound(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const SymMatrix a = matrix_from_file(path);
    if (!a.is_nonnegative()) {
        out << "matrix has a negative entry, so it is not completely positive\n";
        return 1;
    }
    const LabeledGraph g = graph_of(a);
    const CprBound bound = cpr_bound_rules(g);
    if (cfg.format == "json") {
        emit_json(nlohmann::json{{"value", bound.value},
                                 {"derivation", bound.derivation},
                                 {"uses_unsettled_fallback", bound.uses_unsettled_fallback}},
                  out);
    } else {
        out << "cp-rank bound for any completely positive matrix with this graph: " << bound.value
            << "\n";
        out << "derivation:\n";
        for (const std::string& line : bound.derivation) out << "  " << line << "\n";
        if (bound.uses_unsettled_fallback)
            out << "note: the bound leans on an order constant that is not settled\n";
    }
    return 0;
}

int cmd_decomp_pairmove(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const WeightedCpDecomposition dec = decomposition_from_file(path);
    const MatR before = dec.realize();
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        for (std::size_t j = 0; j < dec.terms.size(); ++j) {
            if (i == j) continue;
            if (!dec.terms[i].support().subset_of(dec.terms[j].support())) continue;
            const auto [first, second] = pairmove(dec.terms[i], dec.terms[j]);
            WeightedCpDecomposition result;
            result.n = dec.n;
            for (std::size_t k = 0; k < dec.terms.size(); ++k)
                if (k != i && k != j) result.terms.push_back(dec.terms[k]);
            if (first) result.terms.push_back(*first);
            result.terms.push_back(second);
            if (result.realize() != before)
                throw CaseFailed("pairmove changed the realized matrix; this is a defect");
            if (cfg.format == "json") {
                emit_json(nlohmann::json{{"moved_inner", i + 1},
                                         {"moved_outer", j + 1},
                                         {"decomposition", decomposition_to_json(result)}},
                          out);
            } else {
                out << "moved term " << (i + 1) << " (support "
                    << dec.terms[i].support().to_string() << ") against term " << (j + 1)
                    << " (support " << dec.terms[j].support().to_string() << ")\n";
                render_decomposition(result, out);
            }
            return 0;
        }
    }
    out << "no term's support is contained in another term's support; nothing to move\n";
    return 1;
}

int cmd_decomp_distinct(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const WeightedCpDecomposition dec = decomposition_from_file(path);
    const MatR before = dec.realize();
    const WeightedCpDecomposition result = distinct_supports(dec);
    if (result.realize() != before)
        throw CaseFailed("support separation changed the realized matrix; this is a defect");
    if (cfg.format == "json") {
        emit_json(nlohmann::json{{"decomposition", decomposition_to_json(result)}}, out);
    } else {
        render_decomposition(result, out);
    }
    return 0;
}

int cmd_decomp_dd(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const SymMatrix a = matrix_or_realization_from_file(path);
    if (!a.is_nonnegative()) {
        out << "matrix has a negative entry, so it has no nonnegative decomposition\n";
        return 1;
    }
    const std::optional<VecR> d = dd_orbit_witness(a);
    if (!d) {
        out << "no positive diagonal scaling makes the matrix diagonally dominant\n";
        return 1;
    }
    const WeightedCpDecomposition result = dd_decomposition(a, *d);
    if (SymMatrix(result.realize()) != a)
        throw CaseFailed("the dominance decomposition does not realize the input; this is a defect");
    if (cfg.format == "json") {
        emit_json(nlohmann::json{{"scaling", vector_to_json(*d)},
                                 {"decomposition", decomposition_to_json(result)}},
                  out);
    } else {
        out << "diagonal scaling d = " << render_vector(*d) << "\n";
        render_decomposition(result, out);
    }
    return 0;
}

void write_figures(const std::string& dir, std::ostream& out) {
    std::filesystem::create_directories(dir);
    int written = 0;
    for (const FigureGraph& fig : figure_graphs()) {
        const std::filesystem::path path = std::filesystem::path(dir) / (fig.name + ".dot");
        std::ofstream file(path);
        if (!file) throw BadInput("cannot write " + path.string());
        file << graph_to_dot(fig.graph, fig.name);
        ++written;
    }
    out << "wrote " << written << " graph drawings to " << dir << "\n";
}

int cmd_table1_case(const RunConfig& cfg, int case_id, std::ostream& out) {
    const std::vector<Table1Entry> table = load_table1();
    if (case_id < 1 || case_id > static_cast<int>(table.size()))
        throw BadInput("case number must be between 1 and " + std::to_string(table.size()));
    const BoundCertificate cert = certify_case(table[static_cast<std::size_t>(case_id - 1)]);
    if (cfg.format == "json") {
        emit_json(certificate_to_json(cert), out);
    } else {
        render_certificate(cert, out);
        out << "re-verified: yes\n";
    }
    return 0;
}

int cmd_table1_all(const RunConfig& cfg, std::ostream& out) {
    const TheoremReport report = verify_theorem_main(cfg.jobs);
    if (cfg.format == "json") {
        emit_json(report_to_json(report), out);
        return 0;
    }
    out << " case  strategy      bound\n";
    for (const BoundCertificate& cert : report.certificates)
        out << std::setw(5) << cert.case_id << "  " << std::left << std::setw(12)
            << to_string(cert.strategy) << std::right << "  " << std::setw(5) << cert.bound << "\n";
    out << "zero-diagonal patterns: cycle " << report.zero_diagonal.cycle_pattern.bound
        << ", triples " << report.zero_diagonal.triples_pattern.bound << "\n";
    out << "largest bound over the " << report.certificates.size() << " cases: " << report.max_bound
        << "\n";
    out << "figures:\n";
    for (const FigureComparison& fig : report.figures) {
        out << "  " << fig.name << " (case " << fig.case_id << "): ";
        if (fig.expected_tf)
            out << "drawn tf " << fig.drawing_tf.value_or(-1) << ", stated " << *fig.expected_tf;
        else
            out << "no stated tf value";
        if (fig.definitional_tf) out << ", member graph tf " << *fig.definitional_tf;
        if (!fig.note.empty()) out << "  [" << fig.note << "]";
        out << "\n";
    }
    for (const std::string& line : report.audit) out << "audit: " << line << "\n";
    out << report.also_applicable.size()
        << " cases admit an alternative strategy (details in the JSON report)\n";
    out << report.closing_statement << "\n";
    return 0;
}

int cmd_horn(const RunConfig& cfg, std::ostream& out) {
    const SymMatrix h = horn_matrix();
    if (cfg.format == "json") {
        emit_json(matrix_to_json(h), out);
    } else {
        out << render_matrix(h.mat());
    }
    return 0;
}

int default_jobs() {
    if (const char* env = std::getenv("COPOS_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of copositive matrices, their zeros, and completely positive decompositions"};
    app.name("copositive");
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.jobs = default_jobs();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--eps", cfg.eps, "entrywise tolerance for the orthogonal-witness search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for the orthogonal-witness search")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for the case sweep (default: COPOS_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;

    std::string check_path;
    auto* sub_check = app.add_subcommand("check", "decide copositivity by the exact simplex minimum");
    sub_check->add_option("matrix", check_path, "matrix JSON file")->required();
    sub_check->fallthrough();
    sub_check->callback([&] { action = [&] { return cmd_check(cfg, check_path, out); }; });

    std::string zeros_path;
    auto* sub_zeros = app.add_subcommand("zeros", "zero supports and minimal zeros of a copositive matrix");
    sub_zeros->add_option("matrix", zeros_path, "matrix JSON file")->required();
    sub_zeros->fallthrough();
    sub_zeros->callback([&] { action = [&] { return cmd_zeros(cfg, zeros_path, out); }; });

    std::string irr_path;
    auto* sub_irr = app.add_subcommand("irreducible", "irreducibility against nonnegative perturbations");
    sub_irr->add_option("matrix", irr_path, "matrix JSON file")->required();
    sub_irr->fallthrough();
    sub_irr->callback([&] { action = [&] { return cmd_irreducible(cfg, irr_path, out); }; });

    std::string tf_path;
    auto* sub_tf = app.add_subcommand("tf", "exact maximum triangle-free subgraph of a graph");
    sub_tf->add_option("graph", tf_path, "graph JSON or DOT file")->required();
    sub_tf->fallthrough();
    sub_tf->callback([&] { action = [&] { return cmd_tf(cfg, tf_path, out); }; });

    auto* sub_cp = app.add_subcommand("cp", "completely positive matrix analysis");
    sub_cp->require_subcommand(1);
    sub_cp->fallthrough();
    std::string cp_bound_path;
    auto* sub_cp_bound = sub_cp->add_subcommand("bound", "cp-rank bound from the matrix graph, with derivation");
    sub_cp_bound->add_option("matrix", cp_bound_path, "matrix JSON file")->required();
    sub_cp_bound->fallthrough();
    sub_cp_bound->callback([&] { action = [&] { return cmd_cp_bound(cfg, cp_bound_path, out); }; });

    auto* sub_decomp = app.add_subcommand("decomp", "rank-one decomposition rewrites");
    sub_decomp->require_subcommand(1);
    sub_decomp->fallthrough();
    std::string pairmove_path;
    auto* sub_pairmove = sub_decomp->add_subcommand("pairmove", "exchange step on one nested pair of terms");
    sub_pairmove->add_option("decomposition", pairmove_path, "decomposition JSON file")->required();
    sub_pairmove->fallthrough();
    sub_pairmove->callback([&] { action = [&] { return cmd_decomp_pairmove(cfg, pairmove_path, out); }; });
    std::string distinct_path;
    auto* sub_distinct = sub_decomp->add_subcommand("distinct", "rewrite until all term supports are pairwise distinct");
    sub_distinct->add_option("decomposition", distinct_path, "decomposition JSON file")->required();
    sub_distinct->fallthrough();
    sub_distinct->callback([&] { action = [&] { return cmd_decomp_distinct(cfg, distinct_path, out); }; });
    std::string dd_path;
    auto* sub_dd = sub_decomp->add_subcommand("dd", "decomposition with supports of size at most 2 via diagonal dominance");
    sub_dd->add_option("input", dd_path, "matrix or decomposition JSON file")->required();
    sub_dd->fallthrough();
    sub_dd->callback([&] { action = [&] { return cmd_decomp_dd(cfg, dd_path, out); }; });

    auto* sub_table1 = app.add_subcommand("table1", "the 44-case support-family analysis");
    sub_table1->require_subcommand(1);
    sub_table1->fallthrough();
    auto* sub_verify = sub_table1->add_subcommand("verify", "certify the cp-rank bound of every case (or one case)");
    int case_id = 0;
    std::string dot_dir;
    auto* case_opt = sub_verify->add_option("--case", case_id, "verify a single case (1-44)");
    sub_verify->add_option("--dot-dir", dot_dir, "also write the eleven reference drawings as DOT files");
    sub_verify->fallthrough();
    sub_verify->callback([&, case_opt] {
        action = [&, chosen = !case_opt->empty()] {
            if (!dot_dir.empty()) write_figures(dot_dir, out);
            return chosen ? cmd_table1_case(cfg, case_id, out) : cmd_table1_all(cfg, out);
        };
    });

    auto* sub_horn = app.add_subcommand("horn", "print the order-5 exceptional extremal matrix");
    sub_horn->fallthrough();
    sub_horn->callback([&] { action = [&] { return cmd_horn(cfg, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (!action) {
        err << "no command selected\n";
        return 2;
    }
    try {
        return action();
    } catch (const NotCopositive& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const NotInCone& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const WitnessNotFound& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const CaseFailed& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace copos
