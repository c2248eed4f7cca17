#pragma once

// Structural matrix operations: diagonal congruence to unit diagonal (with
// exact quadratic-extension entries), exact positive-semidefiniteness with
// nullspace, matrix graphs, and diagonal-dominance orbit witnesses.

#include "copos/graph.hpp"
#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

#include <optional>
#include <vector>

namespace copos {

struct UnitScaleResult {
    // d_i = 1 / sqrt(a_ii), exactly represented.
    std::vector<SqrtRational> d;
    // b = (diag d) a (diag d); entries exact, unit diagonal. b[i][j] is
    // rational whenever a_ii * a_jj is a perfect rational square.
    std::vector<std::vector<SqrtRational>> b;
    // True when every entry of b is rational.
    bool all_rational = false;
    // The same matrix over Rational; requires all_rational.
    SymMatrix b_matrix() const;
};

// Throws NonPositiveDiagonal if any a_ii <= 0.
UnitScaleResult unit_diagonal_scale(const SymMatrix& a);

struct PsdResult {
    bool psd = false;
    // Basis of the kernel when psd (first nonzero entry of each vector is 1,
    // vectors in deterministic order). Empty when not psd.
    std::vector<VecR> nullspace;
};

// Exact PSD decision by recursive rational Schur complementation.
PsdResult is_psd(const SymMatrix& a);

// Edge ij (i != j) iff a_ij != 0.
LabeledGraph graph_of(const SymMatrix& a);
// Edge ij iff a_ij == -1 exactly.
LabeledGraph graph_minus_one(const SymMatrix& a);

// A positive diagonal d (normalized to sum 1) such that (diag d) a (diag d)
// is diagonally dominant, when one exists. Throws NotNonnegative when a has a
// negative entry.
std::optional<VecR> dd_orbit_witness(const SymMatrix& a);

// True when a is diagonally dominant: a_ii >= sum_{j != i} |a_ij| for all i.
bool is_diagonally_dominant(const SymMatrix& a);

}  // namespace copos
