#include "copos/copositive.hpp"

#include "copos/exceptions.hpp"
#include "copos/linalg.hpp"
#include "copos/matrix_core.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace copos {

namespace {

constexpr int kMaxSimplexSize = 12;

void check_size(const SymMatrix& a, const char* who) {
    if (a.size() > kMaxSimplexSize) {
        throw DimensionTooLarge(std::string(who) + ": n = " + std::to_string(a.size()) + " exceeds cap " +
                                std::to_string(kMaxSimplexSize));
    }
}

// Stationary system of x^T A x on the relative interior of face sigma:
// A[sigma] u = lambda * 1, sum u = 1, assembled as an (m+1) x (m+1) system in
// (u, lambda).
struct FaceSystem {
    MatR m;
    VecR b;
};

FaceSystem face_system(const SymMatrix& a, const IndexSet& sigma) {
    const int m = sigma.size();
    FaceSystem fs;
    fs.m = MatR::Zero(m + 1, m + 1);
    fs.b = VecR::Zero(m + 1);
    const auto& idx = sigma.indices();
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            fs.m(r, c) = a(idx[static_cast<std::size_t>(r)] - 1, idx[static_cast<std::size_t>(c)] - 1);
        }
        fs.m(r, m) = -1;
    }
    for (int c = 0; c < m; ++c) fs.m(m, c) = 1;
    fs.b(m) = 1;
    return fs;
}

VecR embed(const VecR& local, const IndexSet& sigma, int n) {
    VecR u = VecR::Zero(n);
    const auto& idx = sigma.indices();
    for (int k = 0; k < sigma.size(); ++k) u(idx[static_cast<std::size_t>(k)] - 1) = local(k);
    return u;
}

// Vertices of {v >= 0 : A[sigma] v = rhs * 1, sum v = 1}.
std::vector<VecR> face_polytope_vertices(const SymMatrix& a, const IndexSet& sigma, const Rational& rhs) {
    const int m = sigma.size();
    MatR sys(m + 1, m);
    VecR b(m + 1);
    const auto& idx = sigma.indices();
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            sys(r, c) = a(idx[static_cast<std::size_t>(r)] - 1, idx[static_cast<std::size_t>(c)] - 1);
        }
        b(r) = rhs;
    }
    for (int c = 0; c < m; ++c) sys(m, c) = 1;
    b(m) = 1;
    return enumerate_vertices(sys, b);
}

bool full_support(const VecR& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) == 0) return false;
    }
    return true;
}

std::optional<VecR> full_support_point(const std::vector<VecR>& vertices) {
    if (vertices.empty()) return std::nullopt;
    VecR avg = VecR::Zero(vertices.front().size());
    for (const VecR& v : vertices) avg += v;
    avg /= Rational(static_cast<long>(vertices.size()));
    if (!full_support(avg)) return std::nullopt;
    return avg;
}

}  // namespace

SimplexMinimum simplex_minimum(const SymMatrix& a) {
    check_size(a, "simplex_minimum");
    const int n = a.size();
    SimplexMinimum result;
    if (n == 0) {
        result.value = 0;
        return result;
    }

    std::optional<Rational> best;
    std::vector<MinimizingFace> best_faces;

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const IndexSet sigma = IndexSet::from_mask(mask);
        const FaceSystem fs = face_system(a, sigma);
        const LinearSolution sol = solve_linear(fs.m, fs.b);
        if (sol.status == SolveStatus::Inconsistent) continue;

        const int m = sigma.size();
        // lambda is identical across all solutions of a consistent system
        // (u1^T A u2 = lambda2 = lambda1), so read it off the particular one.
        const Rational lambda = sol.particular(m);

        std::optional<VecR> witness_local;
        if (sol.status == SolveStatus::Unique) {
            bool positive = true;
            for (int k = 0; k < m && positive; ++k) {
                if (sol.particular(k) <= 0) positive = false;
            }
            if (positive) witness_local = VecR(sol.particular.head(m));
        } else {
            witness_local = full_support_point(face_polytope_vertices(a, sigma, lambda));
        }
        if (!witness_local) continue;

        if (!best || lambda < *best) {
            best = lambda;
            best_faces.clear();
        }
        if (lambda == *best) {
            best_faces.push_back({sigma, embed(*witness_local, sigma, n)});
        }
    }

    // Every singleton face is solvable (u = 1, lambda = a_ii), so `best` is
    // always set for n >= 1.
    result.value = *best;
    std::sort(best_faces.begin(), best_faces.end(),
              [](const MinimizingFace& x, const MinimizingFace& y) { return x.face < y.face; });
    result.faces = std::move(best_faces);
    return result;
}

bool is_copositive(const SymMatrix& a) {
    check_size(a, "is_copositive");
    if (a.size() == 0) return true;
    return simplex_minimum(a).value >= 0;
}

std::vector<IndexSet> zero_supports(const SymMatrix& a) {
    check_size(a, "zero_supports");
    if (!is_copositive(a)) {
        throw NotCopositive("zero_supports: matrix is not copositive");
    }
    const int n = a.size();
    std::vector<IndexSet> supports;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const IndexSet sigma = IndexSet::from_mask(mask);
        if (!is_psd(a.principal_submatrix(sigma)).psd) continue;
        const auto vertices = face_polytope_vertices(a, sigma, Rational(0));
        // Union of vertex supports must cover sigma for a full-support zero
        // to exist in the face polytope's relative interior.
        std::uint32_t covered = 0;
        for (const VecR& v : vertices) {
            for (int k = 0; k < sigma.size(); ++k) {
                if (v(k) != 0) covered |= 1u << k;
            }
        }
        if (covered == (1u << sigma.size()) - 1) supports.push_back(sigma);
    }
    std::sort(supports.begin(), supports.end());
    return supports;
}

Zero representative_zero(const SymMatrix& a, const IndexSet& support) {
    const auto vertices = face_polytope_vertices(a, support, Rational(0));
    const auto point = full_support_point(vertices);
    if (!point) {
        throw PreconditionViolated("representative_zero: " + support.to_string() + " is not a zero support");
    }
    Zero z;
    z.vector = embed(*point, support, a.size());
    z.support = support;
    z.minimal = false;
    return z;
}

MatR MinimalZeroMatrix::as_matrix(int n) const {
    MatR w = MatR::Zero(n, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        w.col(static_cast<Eigen::Index>(c)) = columns[c];
    }
    return w;
}

MinimalZeroMatrix minimal_zeros(const SymMatrix& a) {
    const std::vector<IndexSet> supports = zero_supports(a);
    MinimalZeroMatrix result;
    for (const IndexSet& s : supports) {
        bool minimal = true;
        for (const IndexSet& t : supports) {
            if (t != s && t.subset_of(s)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        Zero z = representative_zero(a, s);
        // Normalize: smallest nonzero entry becomes 1.
        Rational smallest;
        bool have = false;
        for (Eigen::Index i = 0; i < z.vector.size(); ++i) {
            if (z.vector(i) != 0 && (!have || z.vector(i) < smallest)) {
                smallest = z.vector(i);
                have = true;
            }
        }
        VecR col = z.vector / smallest;
        result.supports.push_back(s);
        result.columns.push_back(std::move(col));
    }
    return result;
}

IrreducibilityRecord irreducibility(const SymMatrix& a) {
    const std::vector<IndexSet> supports = zero_supports(a);  // throws NotCopositive
    const int n = a.size();
    IrreducibilityRecord rec;
    rec.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) rec.eij[{i, j}] = false;
    }
    for (const IndexSet& sigma : supports) {
        for (const VecR& local : face_polytope_vertices(a, sigma, Rational(0))) {
            const VecR u = embed(local, sigma, n);
            const VecR au = a.mat() * u;
            for (int i = 1; i <= n; ++i) {
                if (au(i - 1) != 0) continue;
                for (int j = i; j <= n; ++j) {
                    if (au(j - 1) != 0) continue;
                    if (u(i - 1) + u(j - 1) > 0) rec.eij[{i, j}] = true;
                }
            }
        }
    }
    rec.n_irreducible = true;
    rec.tilde_n_irreducible = true;
    for (const auto& [pair, flag] : rec.eij) {
        if (!flag) {
            rec.n_irreducible = false;
            if (pair.first != pair.second) rec.tilde_n_irreducible = false;
        }
    }
    return rec;
}

namespace {

void check_structure_preconditions(const SymMatrix& a, const char* who, LabeledGraph& gm1_out) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i, i) != 1) {
            throw PreconditionViolated(std::string(who) + ": diagonal entry " + std::to_string(i + 1) +
                                       " is not 1");
        }
        for (int j = 0; j < a.size(); ++j) {
            if (a(i, j) < -1) {
                throw PreconditionViolated(std::string(who) + ": entry below -1 at (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + ")");
            }
        }
    }
    gm1_out = graph_minus_one(a);
    if (!gm1_out.is_connected()) {
        throw PreconditionViolated(std::string(who) + ": graph of -1 entries is not connected");
    }
}

std::vector<int> bfs_distances(const LabeledGraph& g, int start) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(start)] = 0;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool spn_connected_test(const SymMatrix& a) {
    LabeledGraph gm1;
    check_structure_preconditions(a, "spn_connected_test", gm1);
    if (!gm1.is_bipartite()) return false;
    for (int i = 0; i < a.size(); ++i) {
        const std::vector<int> dist = bfs_distances(gm1, i);
        for (int j = 0; j < a.size(); ++j) {
            if (dist[static_cast<std::size_t>(j)] >= 0 && dist[static_cast<std::size_t>(j)] % 2 == 0 &&
                a(i, j) < 1) {
                return false;
            }
        }
    }
    return true;
}

bool psd_rank1_pm1_test(const SymMatrix& a) {
    LabeledGraph gm1;
    check_structure_preconditions(a, "psd_rank1_pm1_test", gm1);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (a(i, j) != 1 && a(i, j) != -1) return false;
        }
    }
    if (rank_of(a.mat()) != 1) return false;
    return a.size() == 1 || gm1.is_complete_bipartite();
}

SymMatrix horn_matrix() {
    SymMatrix h = SymMatrix::identity(5);
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const bool cycle_adjacent = (j == i + 1) || (i == 0 && j == 4);
            h.set(i, j, Rational(cycle_adjacent ? -1 : 1));
        }
    }
    return h;
}

}  // namespace copos
