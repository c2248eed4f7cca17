#pragma once

#include "copos/graph.hpp"
#include "copos/index_set.hpp"
#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace copos {

// One rank-one term weight * v v^T of a completely positive decomposition.
// Weights keep rewrites rational: (v, w) and (c*v, w/c^2) realize the same
// matrix, so square scale factors can be absorbed without taking roots.
struct CpTerm {
    VecR v;
    Rational weight{1};

    IndexSet support() const;
    MatR realize() const;  // weight * v v^T
};

// A = sum_k weight_k * v_k v_k^T with v_k >= 0 entrywise, v_k != 0, weight_k > 0.
struct WeightedCpDecomposition {
    int n = 0;
    std::vector<CpTerm> terms;

    MatR realize() const;
    bool is_valid() const;
    std::vector<IndexSet> supports() const;
};

// Exchange step on terms (b, w_b), (d, w_d) with supp(b) contained in supp(d).
// With rho = min_{i in supp b} d_i / b_i and tau = (w_d / w_b) * rho, returns
//   first:  vector d - rho * b, weight w_b * w_d / (w_b + w_d * rho^2)
//   second: vector b + tau * d, weight w_b^2   / (w_b + w_d * rho^2)
// (for equal input weights w this is the classic d - r b / b + r d pair, each
// with weight w / (1 + r^2)).  The weighted sum of outer products is preserved
// exactly; the second output's support equals supp(d); the first's support
// lies inside supp(d), contains supp(d) \ supp(b), and omits every index
// attaining rho.  When d = rho * b the first output vanishes and is absent.
std::pair<std::optional<CpTerm>, CpTerm> pairmove(const CpTerm& b, const CpTerm& d);

// Rewrites a decomposition, preserving its realization exactly, until all
// term supports are pairwise distinct: repeatedly applies pairmove to a pair
// of terms sharing a support of maximal size.  Term count never increases.
WeightedCpDecomposition distinct_supports(const WeightedCpDecomposition& dec);

// Decomposition of a nonnegative matrix from a positive vector d such that
// diag(d) * a * diag(d) is diagonally dominant: one two-index term per
// positive off-diagonal entry and one singleton term per positive diagonal
// slack of the scaled matrix, unscaled back so the sum reassembles a exactly.
// Every term has support of size at most 2.
WeightedCpDecomposition dd_decomposition(const SymMatrix& a, const VecR& d);

// Exact cp-rank max(n, |E(G(a))|) for matrices whose graph is triangle-free.
int cpr_triangle_free(const SymMatrix& a);

// Exact cp-rank of the wheel on n >= 4 vertices: (3n-3)/2 for odd n,
// (3n-4)/2 for even n.
int cpr_wheel(int n);

// Best cp-rank upper bound for (any completely positive matrix with) the
// given graph, derived by composing:
//   - the triangle-free formula max(n, |E|),
//   - the wheel value for spanning subgraphs of a wheel,
//   - deletion of a non-isolated vertex of degree <= 2
//     (bound d(v) + bound(G - v)),
//   - max-triangle-free-subgraph equality for connected outerplanar graphs
//     whose tf value is at least n,
//   - additivity over connected components,
//   - a fallback table of order-n maxima (1, 2, 3, 4, 6 for n <= 5; the
//     values used for n = 6, 7, 8 rest on unsettled constants and set
//     uses_unsettled_fallback, so callers can reject bounds that lean on
//     them).
// Graphs on more than 8 vertices are rejected.
struct CprBound {
    int value = 0;
    std::vector<std::string> derivation;
    bool uses_unsettled_fallback = false;
};
CprBound cpr_bound_rules(const LabeledGraph& g);

// Largest cp-rank attainable at any n x n completely positive matrix, from
// the order-maxima table: 1, 2, 3, 4, 6 for n <= 5 (proven values); the
// entries for n = 6, 7, 8 rest on unsettled constants and set
// uses_unsettled_fallback.  Accepts 1 <= n <= 8.
CprBound max_cp_rank_order(int n);

// Given nonnegative b (n x m) and w (n x k), expresses each column b_j as
// w * x_j with x_j >= 0 a vertex of {x >= 0 : w x = b_j} of minimal support,
// ties broken lexicographically.  Throws NotInCone naming the first column
// admitting no such expression.
MatR factor_through_zeros(const MatR& b, const MatR& w);

// Orthogonal q with y * q^T >= eps entrywise, for nonnegative 3x3 y whose
// Gram matrix y y^T is entrywise positive (checked exactly in rational
// arithmetic).  Found by seeded deterministic hill climbing over rotations
// maximizing the minimum entry; the only floating-point computation in the
// library.
struct NearlyPositiveWitness {
    Eigen::Matrix3d q;
    double min_entry = 0.0;
    double orthogonality_error = 0.0;  // max-norm of q q^T - I
    long iterations = 0;
};
NearlyPositiveWitness nearly_positive_witness(const MatR& y, double eps,
                                              std::uint64_t seed = 0);

}  // namespace copos
