#include "copos/cp_decomp.hpp"

#include "copos/exceptions.hpp"
#include "copos/linalg.hpp"
#include "copos/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace copos {

namespace {

void require_term(const CpTerm& t, const char* who) {
    if (t.weight <= 0) throw BadInput(std::string(who) + ": term weight must be positive");
    bool nonzero = false;
    for (Eigen::Index i = 0; i < t.v.size(); ++i) {
        if (t.v(i) < 0) throw BadInput(std::string(who) + ": term vector must be nonnegative");
        if (t.v(i) != 0) nonzero = true;
    }
    if (!nonzero) throw BadInput(std::string(who) + ": term vector must be nonzero");
}

}  // namespace

IndexSet CpTerm::support() const {
    std::vector<int> idx;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) idx.push_back(static_cast<int>(i) + 1);
    }
    return IndexSet(std::move(idx));
}

MatR CpTerm::realize() const {
    return weight * (v * v.transpose());
}

MatR WeightedCpDecomposition::realize() const {
    MatR sum = MatR::Zero(n, n);
    for (const auto& t : terms) sum += t.realize();
    return sum;
}

bool WeightedCpDecomposition::is_valid() const {
    for (const auto& t : terms) {
        if (t.v.size() != n || t.weight <= 0) return false;
        bool nonzero = false;
        for (Eigen::Index i = 0; i < t.v.size(); ++i) {
            if (t.v(i) < 0) return false;
            if (t.v(i) != 0) nonzero = true;
        }
        if (!nonzero) return false;
    }
    return true;
}

std::vector<IndexSet> WeightedCpDecomposition::supports() const {
    std::vector<IndexSet> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.support());
    return out;
}

std::pair<std::optional<CpTerm>, CpTerm> pairmove(const CpTerm& b, const CpTerm& d) {
    require_term(b, "pairmove");
    require_term(d, "pairmove");
    if (b.v.size() != d.v.size()) throw BadInput("pairmove: dimension mismatch");
    const IndexSet supp_b = b.support();
    const IndexSet supp_d = d.support();
    if (!supp_b.subset_of(supp_d)) {
        throw SupportNotNested("pairmove: supp " + supp_b.to_string() + " is not contained in supp " +
                               supp_d.to_string());
    }

    std::optional<Rational> rho;
    for (int i : supp_b) {
        Rational ratio = d.v(i - 1) / b.v(i - 1);
        if (!rho || ratio < *rho) rho = ratio;
    }
    const Rational tau = (d.weight / b.weight) * *rho;
    const Rational scale = b.weight / (b.weight + d.weight * *rho * *rho);

    CpTerm d_out;
    d_out.v = b.v + tau * d.v;
    d_out.weight = scale * b.weight;

    CpTerm b_out;
    b_out.v = d.v - *rho * b.v;
    b_out.weight = scale * d.weight;

    std::optional<CpTerm> b_result;
    if (!b_out.v.isZero(0)) b_result = std::move(b_out);
    return {std::move(b_result), std::move(d_out)};
}

WeightedCpDecomposition distinct_supports(const WeightedCpDecomposition& dec) {
    if (!dec.is_valid()) throw BadInput("distinct_supports: invalid decomposition");
    WeightedCpDecomposition out = dec;
    for (;;) {
        // Group term indices by support; pick the duplicated support of
        // maximal size (ties: lexicographically smallest support).
        std::map<IndexSet, std::vector<std::size_t>> groups;
        for (std::size_t k = 0; k < out.terms.size(); ++k) {
            groups[out.terms[k].support()].push_back(k);
        }
        const std::pair<const IndexSet, std::vector<std::size_t>>* pick = nullptr;
        for (const auto& g : groups) {
            if (g.second.size() < 2) continue;
            if (pick == nullptr || g.first.size() > pick->first.size()) pick = &g;
        }
        if (pick == nullptr) break;
        const std::size_t i = pick->second[0];
        const std::size_t j = pick->second[1];
        auto [b_new, d_new] = pairmove(out.terms[i], out.terms[j]);
        out.terms[i] = std::move(d_new);
        if (b_new) {
            out.terms[j] = std::move(*b_new);
        } else {
            out.terms.erase(out.terms.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    return out;
}

WeightedCpDecomposition dd_decomposition(const SymMatrix& a, const VecR& d) {
    const int n = a.size();
    if (d.size() != n) throw BadInput("dd_decomposition: scaling vector has wrong size");
    for (int i = 0; i < n; ++i) {
        if (d(i) <= 0) throw BadInput("dd_decomposition: scaling vector must be positive");
    }
    if (!a.is_nonnegative()) throw NotNonnegative("dd_decomposition: matrix has a negative entry");

    // Diagonal dominance of diag(d) * a * diag(d); all entries nonnegative,
    // so no absolute values are needed.
    std::vector<Rational> slack(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational row_sum = 0;
        for (int j = 0; j < n; ++j) {
            if (j != i) row_sum += d(i) * a(i, j) * d(j);
        }
        slack[static_cast<std::size_t>(i)] = d(i) * a(i, i) * d(i) - row_sum;
        if (slack[static_cast<std::size_t>(i)] < 0) {
            throw NotDD("dd_decomposition: scaled matrix violates diagonal dominance in row " +
                        std::to_string(i + 1));
        }
    }

    WeightedCpDecomposition out;
    out.n = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a(i, j) == 0) continue;
            CpTerm t;
            t.v = VecR::Zero(n);
            t.v(i) = Rational(1) / d(i);
            t.v(j) = Rational(1) / d(j);
            t.weight = d(i) * a(i, j) * d(j);
            out.terms.push_back(std::move(t));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (slack[static_cast<std::size_t>(i)] == 0) continue;
        CpTerm t;
        t.v = VecR::Zero(n);
        t.v(i) = Rational(1) / d(i);
        t.weight = slack[static_cast<std::size_t>(i)];
        out.terms.push_back(std::move(t));
    }
    return out;
}

int cpr_triangle_free(const SymMatrix& a) {
    const LabeledGraph g = graph_of(a);
    if (!g.is_triangle_free()) throw NotTriangleFree("cpr_triangle_free: graph has a triangle");
    return std::max(g.vertex_count(), g.edge_count());
}

int cpr_wheel(int n) {
    if (n < 4) throw BadInput("cpr_wheel: wheels need at least 4 vertices");
    return (n % 2 == 1) ? (3 * n - 3) / 2 : (3 * n - 4) / 2;
}

namespace {

// True when g is a spanning subgraph of the wheel on its own vertex set:
// some vertex h sees the rest form a subgraph of a cycle (a disjoint union
// of paths, or the full cycle itself).
bool spanning_subgraph_of_wheel(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n < 4) return false;
    for (int h = 0; h < n; ++h) {
        const LabeledGraph rim = g.minus_vertex(h);
        if (rim.is_cycle_graph() || rim.is_disjoint_union_of_paths()) return true;
    }
    return false;
}

std::string vertex_list(const LabeledGraph& g) {
    std::string s = "{";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v > 0) s += ",";
        s += g.label(v);
    }
    return s + "}";
}

void consider(std::vector<CprBound>& cands, CprBound cand) {
    cands.push_back(std::move(cand));
}

// Every recursive call sees an induced subgraph of the original graph, which
// its (unique) label set identifies, so memoizing on the sorted labels keeps
// the vertex-deletion recursion polynomial.
using RuleMemo = std::map<std::vector<std::string>, CprBound>;

CprBound rules_recurse(const LabeledGraph& g, RuleMemo& memo) {
    const int n = g.vertex_count();
    if (n == 0) return {0, {"empty graph: bound 0"}, false};
    std::vector<std::string> key;
    key.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) key.push_back(g.label(v));
    std::sort(key.begin(), key.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<CprBound> cands;
    const auto comps = g.connected_components();
    if (comps.size() >= 2) {
        CprBound sum;
        sum.derivation.push_back(vertex_list(g) + ": sum over " + std::to_string(comps.size()) +
                                 " connected components");
        for (const auto& comp : comps) {
            CprBound part = rules_recurse(g.induced_subgraph(comp), memo);
            sum.value += part.value;
            sum.uses_unsettled_fallback = sum.uses_unsettled_fallback || part.uses_unsettled_fallback;
            for (const auto& line : part.derivation) sum.derivation.push_back("  " + line);
        }
        consider(cands, std::move(sum));
    } else {
        const std::string head = vertex_list(g) + ": ";
        if (g.is_triangle_free()) {
            const int value = std::max(n, g.edge_count());
            consider(cands, {value,
                             {head + "triangle-free, max(" + std::to_string(n) + ", " +
                              std::to_string(g.edge_count()) + ") = " + std::to_string(value)},
                             false});
        }
        if (spanning_subgraph_of_wheel(g)) {
            const int value = cpr_wheel(n);
            consider(cands, {value,
                             {head + "spanning subgraph of the wheel W_" + std::to_string(n) +
                              ", cpr_wheel = " + std::to_string(value)},
                             false});
        }
        if (is_outerplanar(g)) {
            const int tf = max_triangle_free_subgraph(g).value;
            if (tf >= n) {
                consider(cands, {tf,
                                 {head + "connected outerplanar with max triangle-free subgraph " +
                                  std::to_string(tf) + " >= " + std::to_string(n) + ": exact value " +
                                  std::to_string(tf)},
                                 false});
            }
        }
        for (int v = 0; v < n; ++v) {
            const int dv = g.degree(v);
            if (dv == 0 || dv > 2) continue;
            CprBound sub = rules_recurse(g.minus_vertex(v), memo);
            CprBound cand;
            cand.value = dv + sub.value;
            cand.uses_unsettled_fallback = sub.uses_unsettled_fallback;
            cand.derivation.push_back(head + "delete vertex " + g.label(v) + " of degree " +
                                      std::to_string(dv) + ": " + std::to_string(dv) + " + bound of the rest");
            for (const auto& line : sub.derivation) cand.derivation.push_back("  " + line);
            consider(cands, std::move(cand));
        }
        static constexpr int kOrderMax[9] = {0, 1, 2, 3, 4, 6, 15, 27, 35};
        consider(cands, {kOrderMax[n],
                         {head + "fallback order-" + std::to_string(n) + " maximum " +
                          std::to_string(kOrderMax[n]) + (n >= 6 ? " (unsettled constant)" : "")},
                         n >= 6});
    }

    // Smallest bound wins; on ties prefer one that avoids unsettled
    // constants, then the earliest generated (deterministic).
    const CprBound* best = &cands.front();
    for (const auto& c : cands) {
        if (c.value < best->value ||
            (c.value == best->value && !c.uses_unsettled_fallback && best->uses_unsettled_fallback)) {
            best = &c;
        }
    }
    memo[key] = *best;
    return *best;
}

}  // namespace

CprBound cpr_bound_rules(const LabeledGraph& g) {
    if (g.vertex_count() > 8) {
        throw DimensionTooLarge("cpr_bound_rules: graph has " + std::to_string(g.vertex_count()) +
                                " vertices (cap 8)");
    }
    RuleMemo memo;
    return rules_recurse(g, memo);
}

CprBound max_cp_rank_order(int n) {
    if (n < 1 || n > 8) {
        throw DimensionTooLarge("max_cp_rank_order: n = " + std::to_string(n) +
                                " outside the tabulated range 1..8");
    }
    static constexpr int kOrderMax[9] = {0, 1, 2, 3, 4, 6, 15, 27, 35};
    CprBound b;
    b.value = kOrderMax[n];
    b.derivation = {"order-" + std::to_string(n) + " maximum " + std::to_string(b.value) +
                    (n >= 6 ? " (unsettled constant)" : " (proven)")};
    b.uses_unsettled_fallback = n >= 6;
    return b;
}

MatR factor_through_zeros(const MatR& b, const MatR& w) {
    if (b.rows() != w.rows()) throw BadInput("factor_through_zeros: row count mismatch");
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (b(i, j) < 0) throw BadInput("factor_through_zeros: b has a negative entry");
        }
    }
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
            if (w(i, j) < 0) throw BadInput("factor_through_zeros: w has a negative entry");
        }
    }

    MatR x = MatR::Zero(w.cols(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const auto vertices = enumerate_vertices(w, VecR(b.col(j)));
        if (vertices.empty()) {
            throw NotInCone("factor_through_zeros: column " + std::to_string(j + 1) +
                            " is not a nonnegative combination of the given columns");
        }
        // Minimal support among vertex solutions; ties lexicographic. The
        // vertex list is already lex-sorted, so the first minimum wins both.
        const VecR* pick = nullptr;
        int pick_size = std::numeric_limits<int>::max();
        for (const auto& v : vertices) {
            int size = 0;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (v(i) != 0) ++size;
            }
            if (size < pick_size) {
                pick = &v;
                pick_size = size;
            }
        }
        x.col(j) = *pick;
    }
    return x;
}

namespace {

Eigen::Matrix3d axis_rotation(int axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
    const int a = (axis + 1) % 3;
    const int b = (axis + 2) % 3;
    r(a, a) = c;
    r(a, b) = -s;
    r(b, a) = s;
    r(b, b) = c;
    return r;
}

// Gram-Schmidt on rows, keeping the matrix a proper rotation up to roundoff.
Eigen::Matrix3d reorthonormalize(const Eigen::Matrix3d& q) {
    Eigen::Matrix3d r = q;
    r.row(0).normalize();
    r.row(1) -= r.row(1).dot(r.row(0)) * r.row(0);
    r.row(1).normalize();
    r.row(2) -= r.row(2).dot(r.row(0)) * r.row(0);
    r.row(2) -= r.row(2).dot(r.row(1)) * r.row(1);
    r.row(2).normalize();
    return r;
}

double min_product_entry(const Eigen::Matrix3d& y, const Eigen::Matrix3d& q) {
    return (y * q.transpose()).minCoeff();
}

}  // namespace

NearlyPositiveWitness nearly_positive_witness(const MatR& y, double eps, std::uint64_t seed) {
    if (y.rows() != 3 || y.cols() != 3) {
        throw PreconditionViolated("nearly_positive_witness: y must be 3x3");
    }
    if (eps <= 0) throw BadInput("nearly_positive_witness: eps must be positive");
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (y(i, j) < 0) {
                throw PreconditionViolated("nearly_positive_witness: y has a negative entry");
            }
        }
    }
    // Exact rational check that the Gram matrix y y^T is entrywise positive.
    const MatR gram = y * y.transpose();
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (gram(i, j) <= 0) {
                throw PreconditionViolated(
                    "nearly_positive_witness: y y^T is not entrywise positive (rows " +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
    }

    Eigen::Matrix3d yd;
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) yd(i, j) = to_double(y(i, j));
    }

    // The identity is already a witness for strictly positive y.
    {
        NearlyPositiveWitness id;
        id.q = Eigen::Matrix3d::Identity();
        id.min_entry = min_product_entry(yd, id.q);
        if (id.min_entry >= eps) return id;
    }

    // Deterministic hill climbing over rotations: from each start, repeatedly
    // try the six single-axis rotations at the current step size, halving the
    // step when none improves the minimum entry of y q^T.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle_dist(-3.141592653589793, 3.141592653589793);
    constexpr int kRestarts = 64;
    constexpr long kStepBudget = 400000;

    NearlyPositiveWitness best;
    best.q = Eigen::Matrix3d::Identity();
    best.min_entry = min_product_entry(yd, best.q);
    long iterations = 0;

    for (int restart = 0; restart < kRestarts && iterations < kStepBudget; ++restart) {
        Eigen::Matrix3d q;
        if (restart == 0) {
            q = Eigen::Matrix3d::Identity();
        } else {
            q = axis_rotation(0, angle_dist(rng)) * axis_rotation(1, angle_dist(rng)) *
                axis_rotation(2, angle_dist(rng));
        }
        double value = min_product_entry(yd, q);
        double step = 0.5;
        int since_cleanup = 0;
        while (step > 1e-13 && iterations < kStepBudget) {
            bool improved = false;
            for (int axis = 0; axis < 3 && !improved; ++axis) {
                for (int sign = -1; sign <= 1 && !improved; sign += 2) {
                    ++iterations;
                    const Eigen::Matrix3d cand = axis_rotation(axis, sign * step) * q;
                    const double cand_value = min_product_entry(yd, cand);
                    if (cand_value > value) {
                        q = cand;
                        value = cand_value;
                        improved = true;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
            } else if (++since_cleanup >= 64) {
                q = reorthonormalize(q);
                value = min_product_entry(yd, q);
                since_cleanup = 0;
            }
        }
        q = reorthonormalize(q);
        value = min_product_entry(yd, q);
        if (value > best.min_entry) {
            best.q = q;
            best.min_entry = value;
        }
        if (best.min_entry >= 2 * eps) break;
    }

    best.iterations = iterations;
    best.orthogonality_error =
        (best.q * best.q.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (best.min_entry < eps) {
        throw WitnessNotFound("nearly_positive_witness: best minimum entry " +
                              std::to_string(best.min_entry) + " below eps after " +
                              std::to_string(iterations) + " steps");
    }
    return best;
}

}  // namespace copos
