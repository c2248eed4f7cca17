#pragma once

// Exact symmetric rational matrices with principal-submatrix extraction by
// 1-based index sets and quadratic-form evaluation.

#include "copos/index_set.hpp"
#include "copos/rational.hpp"

#include <vector>

namespace copos {

class SymMatrix {
public:
    SymMatrix() = default;
    // Requires square and exactly symmetric.
    explicit SymMatrix(MatR m);
    static SymMatrix zero(int n);
    static SymMatrix identity(int n);
    static SymMatrix all_ones(int n);
    // Row-major upper triangle including the diagonal, length n(n+1)/2.
    static SymMatrix from_upper_triangle(int n, const std::vector<Rational>& entries);

    int size() const { return static_cast<int>(m_.rows()); }
    const MatR& mat() const { return m_; }
    const Rational& operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, const Rational& v);

    // Principal submatrix on 1-based indices; requires max index <= size.
    SymMatrix principal_submatrix(const IndexSet& s) const;
    Rational quadratic_form(const VecR& u) const;
    bool has_unit_diagonal() const;
    bool is_nonnegative() const;
    std::vector<Rational> upper_triangle() const;

    bool operator==(const SymMatrix& other) const;

private:
    MatR m_;
};

}  // namespace copos
