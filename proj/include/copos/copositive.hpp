#pragma once

// Exact decision procedures on the copositive cone: the simplex minimum of
// the quadratic form (hence copositivity), zero supports, minimal zeros,
// irreducibility with respect to nonnegative perturbations, and the
// bipartite/complete-bipartite structure tests for matrices with unit
// diagonal and entries >= -1.

#include "copos/index_set.hpp"
#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

#include <map>
#include <utility>
#include <vector>

namespace copos {

struct MinimizingFace {
    IndexSet face;
    // Point of the standard simplex attaining the minimum, supported exactly
    // on `face`.
    VecR witness;
};

struct SimplexMinimum {
    Rational value;
    // All faces carrying a relative-interior minimizer, sorted by face.
    std::vector<MinimizingFace> faces;
};

// Exact minimum of x^T A x over the standard simplex by full face
// enumeration: on each face the stationary system A[s]u = lambda*1, sum u = 1
// is solved exactly; interior stationary points and simplex vertices cover
// every candidate. Throws DimensionTooLarge above n = 12.
SimplexMinimum simplex_minimum(const SymMatrix& a);

bool is_copositive(const SymMatrix& a);

struct Zero {
    VecR vector;  // >= 0, != 0, u^T A u = 0
    IndexSet support;
    bool minimal = false;
};

// All zero supports of a copositive matrix: s is reported iff A[s] is PSD and
// the polytope {v >= 0 : A[s]v = 0, sum v = 1} contains a point with full
// support s (equivalently: vertex supports cover s). Throws NotCopositive.
std::vector<IndexSet> zero_supports(const SymMatrix& a);

// A zero of full support `support` (the average of the face polytope's
// vertices); requires `support` to be a zero support.
Zero representative_zero(const SymMatrix& a, const IndexSet& support);

struct MinimalZeroMatrix {
    // One column per minimal zero support, lexicographic by support; each
    // column normalized so its smallest nonzero entry is 1.
    std::vector<IndexSet> supports;
    std::vector<VecR> columns;
    // Columns side by side as an n x k matrix.
    MatR as_matrix(int n) const;
};

MinimalZeroMatrix minimal_zeros(const SymMatrix& a);

struct IrreducibilityRecord {
    int n = 0;
    // 1-based pairs (i, j) with i <= j; true means irreducible with respect
    // to perturbation by E_ij: some zero u has (Au)_i = (Au)_j = 0 and
    // u_i + u_j > 0.
    std::map<std::pair<int, int>, bool> eij;
    bool n_irreducible = false;        // all pairs i <= j
    bool tilde_n_irreducible = false;  // all pairs i < j
};

IrreducibilityRecord irreducibility(const SymMatrix& a);

// For A with unit diagonal, entries >= -1, and connected G_{-1}(A): true iff
// G_{-1}(A) is bipartite and a_ij >= 1 whenever the G_{-1} distance of i and
// j is even. Throws PreconditionViolated on any precondition failure.
bool spn_connected_test(const SymMatrix& a);

// Same preconditions: true iff A is a +-1 matrix of rank 1 whose G_{-1} is
// complete bipartite (the only PSD possibility under the preconditions).
bool psd_rank1_pm1_test(const SymMatrix& a);

SymMatrix horn_matrix();

}  // namespace copos
