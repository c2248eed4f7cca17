#include "copos/linalg.hpp"

#include "copos/exceptions.hpp"

#include <algorithm>
#include <set>

namespace copos {

namespace {

// Reduce m to reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(MatR& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != r) m.row(pivot_row).swap(m.row(r));
        const Rational inv = Rational(1) / m(r, c);
        m.row(r) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            m.row(i) -= factor * m.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

VecR normalize_first_nonzero(VecR v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) {
            const Rational inv = Rational(1) / v(i);
            v *= inv;
            return v;
        }
    }
    return v;
}

}  // namespace

LinearSolution solve_linear(MatR a, VecR b) {
    if (a.rows() != b.size()) {
        throw BadInput("solve_linear: incompatible shapes");
    }
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    MatR aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    const std::vector<int> pivots = rref_in_place(aug);

    LinearSolution result;
    if (!pivots.empty() && pivots.back() == cols) {
        result.status = SolveStatus::Inconsistent;
        return result;
    }
    result.particular = VecR::Zero(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        result.particular(pivots[i]) = aug(static_cast<int>(i), cols);
    }
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecR v = VecR::Zero(cols);
        v(f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v(pivots[i]) = -aug(static_cast<int>(i), f);
        }
        result.nullspace.push_back(normalize_first_nonzero(std::move(v)));
    }
    result.status = result.nullspace.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return result;
}

int rank_of(MatR a) {
    return static_cast<int>(rref_in_place(a).size());
}

std::vector<VecR> kernel_basis(const MatR& a) {
    return solve_linear(a, VecR::Zero(a.rows())).nullspace;
}

bool lex_less(const VecR& a, const VecR& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

std::vector<VecR> enumerate_vertices(const MatR& m, const VecR& b) {
    if (m.rows() != b.size()) {
        throw BadInput("enumerate_vertices: incompatible shapes");
    }
    const int cols = static_cast<int>(m.cols());
    const int r = rank_of(m);

    // Work cap: number of column bases examined.
    {
        double combos = 1.0;
        for (int i = 0; i < r; ++i) combos *= static_cast<double>(cols - i) / (i + 1);
        if (combos > 5e6) {
            throw TooLarge("enumerate_vertices: too many column bases (" + std::to_string(combos) + ")");
        }
    }

    std::set<std::vector<Rational>> seen;
    std::vector<VecR> vertices;

    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i;
    bool done = (r > cols);
    while (!done) {
        MatR sub(m.rows(), r);
        for (int j = 0; j < r; ++j) sub.col(j) = m.col(subset[j]);
        LinearSolution sol = solve_linear(sub, b);
        if (sol.status == SolveStatus::Unique) {
            bool nonneg = true;
            for (int j = 0; j < r && nonneg; ++j) {
                if (sol.particular(j) < 0) nonneg = false;
            }
            if (nonneg) {
                VecR y = VecR::Zero(cols);
                for (int j = 0; j < r; ++j) y(subset[j]) = sol.particular(j);
                std::vector<Rational> key(y.data(), y.data() + y.size());
                if (seen.insert(key).second) vertices.push_back(std::move(y));
            }
        }
        // Advance to the next size-r combination.
        if (r == 0) break;
        int i = r - 1;
        while (i >= 0 && subset[i] == cols - r + i) --i;
        if (i < 0) {
            done = true;
        } else {
            ++subset[i];
            for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
        }
    }

    std::sort(vertices.begin(), vertices.end(), lex_less);
    return vertices;
}

}  // namespace copos
