#pragma once

// Exact linear algebra over the rationals: Gaussian elimination with full
// solution structure (particular solution + nullspace basis), rank, and
// vertex enumeration for polyhedra of the form {y >= 0 : M y = b}.

#include "copos/rational.hpp"

#include <vector>

namespace copos {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
    SolveStatus status = SolveStatus::Inconsistent;
    // A solution with all free variables set to zero; meaningful unless Inconsistent.
    VecR particular;
    // Basis of the homogeneous solution space, each vector scaled so its first
    // nonzero entry is 1; empty when the solution is unique.
    std::vector<VecR> nullspace;
};

// Solve a x = b exactly.
LinearSolution solve_linear(MatR a, VecR b);

int rank_of(MatR a);

// Basis of {x : a x = 0}, each vector scaled so its first nonzero entry is 1.
std::vector<VecR> kernel_basis(const MatR& a);

// All vertices (basic feasible solutions) of the polyhedron {y >= 0 : m y = b},
// deduplicated and sorted lexicographically. Every vertex of the polyhedron is
// returned; for bounded polyhedra these are exactly the extreme points. Throws
// TooLarge when the number of candidate column bases exceeds an internal cap.
std::vector<VecR> enumerate_vertices(const MatR& m, const VecR& b);

// Deterministic lexicographic comparison (shorter vectors first on ties).
bool lex_less(const VecR& a, const VecR& b);

}  // namespace copos
