#include "copos/matrix_core.hpp"

#include "copos/exceptions.hpp"
#include "copos/linalg.hpp"

#include <algorithm>

namespace copos {

SymMatrix UnitScaleResult::b_matrix() const {
    if (!all_rational) {
        throw PreconditionViolated("UnitScaleResult::b_matrix: entries are not all rational");
    }
    const int n = static_cast<int>(b.size());
    SymMatrix out = SymMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j < i) continue;
            out.set(i, j, b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].as_rational());
        }
    }
    return out;
}

UnitScaleResult unit_diagonal_scale(const SymMatrix& a) {
    const int n = a.size();
    UnitScaleResult result;
    result.d.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (a(i, i) <= 0) {
            throw NonPositiveDiagonal("unit_diagonal_scale: diagonal entry " + std::to_string(i + 1) + " is " +
                                      to_string(a(i, i)));
        }
        result.d.push_back(SqrtRational::sqrt_of(Rational(1) / a(i, i)));
    }
    result.b.assign(static_cast<std::size_t>(n), std::vector<SqrtRational>(static_cast<std::size_t>(n)));
    result.all_rational = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SqrtRational entry = (result.d[static_cast<std::size_t>(i)] * result.d[static_cast<std::size_t>(j)]) *
                                 a(i, j);
            if (!entry.is_rational()) result.all_rational = false;
            result.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(entry);
        }
    }
    return result;
}

namespace {

// Kernel basis vectors in deterministic order with first nonzero entry 1.
VecR normalize_first_nonzero(VecR v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) {
            const Rational inv = Rational(1) / v(i);
            v *= inv;
            break;
        }
    }
    return v;
}

// Recursive Schur complementation on the matrix restricted to `active`
// (indices into the original matrix). Returns false and stops early when not
// PSD; otherwise fills `kernel` with a basis of the kernel of the restricted
// matrix, expressed in original coordinates (zero outside `active`).
bool psd_recurse(const MatR& m, std::vector<int> active, int full_n, std::vector<VecR>& kernel) {
    if (active.empty()) return true;

    // Zero-diagonal indices: row must vanish on the active set, and then the
    // coordinate vector joins the kernel.
    std::vector<int> zero_diag;
    std::vector<int> rest;
    for (int i : active) {
        if (m(i, i) == 0) {
            zero_diag.push_back(i);
        } else if (m(i, i) < 0) {
            return false;
        } else {
            rest.push_back(i);
        }
    }
    if (!zero_diag.empty()) {
        for (int i : zero_diag) {
            for (int j : active) {
                if (m(i, j) != 0) return false;
            }
            VecR e = VecR::Zero(full_n);
            e(i) = 1;
            kernel.push_back(std::move(e));
        }
        return psd_recurse(m, std::move(rest), full_n, kernel);
    }

    // All active diagonals positive: pivot on the largest diagonal entry.
    int pivot = active[0];
    for (int i : active) {
        if (m(i, i) > m(pivot, pivot)) pivot = i;
    }
    std::vector<int> remaining;
    for (int i : active) {
        if (i != pivot) remaining.push_back(i);
    }
    if (remaining.empty()) return true;

    MatR schur = m;  // only entries on `remaining` are meaningful below
    const Rational inv_p = Rational(1) / m(pivot, pivot);
    for (int i : remaining) {
        for (int j : remaining) {
            schur(i, j) = m(i, j) - m(i, pivot) * m(pivot, j) * inv_p;
        }
    }
    std::vector<VecR> sub_kernel;
    if (!psd_recurse(schur, remaining, full_n, sub_kernel)) return false;
    // Lift: x agrees with y off the pivot, x_pivot = -(sum_j a_{pivot,j} y_j) / a_{pivot,pivot}.
    for (VecR& y : sub_kernel) {
        Rational dot = 0;
        for (int j : remaining) dot += m(pivot, j) * y(j);
        y(pivot) = -dot * inv_p;
        kernel.push_back(std::move(y));
    }
    return true;
}

}  // namespace

PsdResult is_psd(const SymMatrix& a) {
    PsdResult result;
    std::vector<int> active(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) active[static_cast<std::size_t>(i)] = i;
    std::vector<VecR> kernel;
    result.psd = psd_recurse(a.mat(), std::move(active), a.size(), kernel);
    if (result.psd) {
        for (VecR& v : kernel) result.nullspace.push_back(normalize_first_nonzero(std::move(v)));
        std::sort(result.nullspace.begin(), result.nullspace.end(), lex_less);
    }
    return result;
}

LabeledGraph graph_of(const SymMatrix& a) {
    LabeledGraph g;
    for (int i = 1; i <= a.size(); ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            if (a(i, j) != 0) g.add_edge(i, j);
        }
    }
    return g;
}

LabeledGraph graph_minus_one(const SymMatrix& a) {
    LabeledGraph g;
    for (int i = 1; i <= a.size(); ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            if (a(i, j) == -1) g.add_edge(i, j);
        }
    }
    return g;
}

bool is_diagonally_dominant(const SymMatrix& a) {
    for (int i = 0; i < a.size(); ++i) {
        Rational off = 0;
        for (int j = 0; j < a.size(); ++j) {
            if (j != i) off += a(i, j) < 0 ? Rational(-a(i, j)) : a(i, j);
        }
        if (a(i, i) < off) return false;
    }
    return true;
}

std::optional<VecR> dd_orbit_witness(const SymMatrix& a) {
    if (!a.is_nonnegative()) {
        throw NotNonnegative("dd_orbit_witness: matrix has a negative entry");
    }
    const int n = a.size();
    if (n == 0) return VecR();

    // Feasibility of d > 0 with a_ii d_i >= sum_{j != i} a_ij d_j, scaled to
    // sum d_i = 1. Slack form: a_ii d_i - sum_{j != i} a_ij d_j - s_i = 0,
    // variables y = (d, s) >= 0. The relative interior of the feasible set is
    // reached by averaging all vertices; d > 0 exists iff the average has it.
    MatR m = MatR::Zero(n + 1, 2 * n);
    VecR b = VecR::Zero(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = i == j ? a(i, i) : -a(i, j);
        }
        m(i, n + i) = -1;
    }
    for (int j = 0; j < n; ++j) m(n, j) = 1;
    b(n) = 1;

    const std::vector<VecR> vertices = enumerate_vertices(m, b);
    if (vertices.empty()) return std::nullopt;
    VecR avg = VecR::Zero(2 * n);
    for (const VecR& v : vertices) avg += v;
    avg /= Rational(static_cast<long>(vertices.size()));
    VecR d = avg.head(n);
    for (int i = 0; i < n; ++i) {
        if (d(i) <= 0) return std::nullopt;
    }
    return d;
}

}  // namespace copos
