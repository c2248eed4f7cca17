#include "copos/sym_matrix.hpp"

#include "copos/exceptions.hpp"

namespace copos {

SymMatrix::SymMatrix(MatR m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw BadInput("SymMatrix: matrix is not square");
    }
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
            if (m_(i, j) != m_(j, i)) {
                throw BadInput("SymMatrix: not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

SymMatrix SymMatrix::zero(int n) {
    SymMatrix s;
    s.m_ = MatR::Zero(n, n);
    return s;
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix s = zero(n);
    for (int i = 0; i < n; ++i) s.m_(i, i) = 1;
    return s;
}

SymMatrix SymMatrix::all_ones(int n) {
    SymMatrix s;
    s.m_ = MatR::Constant(n, n, Rational(1));
    return s;
}

SymMatrix SymMatrix::from_upper_triangle(int n, const std::vector<Rational>& entries) {
    if (static_cast<int>(entries.size()) != n * (n + 1) / 2) {
        throw BadInput("SymMatrix::from_upper_triangle: expected " + std::to_string(n * (n + 1) / 2) +
                       " entries, got " + std::to_string(entries.size()));
    }
    SymMatrix s = zero(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            s.m_(i, j) = entries[k];
            s.m_(j, i) = entries[k];
            ++k;
        }
    }
    return s;
}

void SymMatrix::set(int i, int j, const Rational& v) {
    if (i < 0 || j < 0 || i >= size() || j >= size()) {
        throw BadInput("SymMatrix::set: index out of range");
    }
    m_(i, j) = v;
    m_(j, i) = v;
}

SymMatrix SymMatrix::principal_submatrix(const IndexSet& s) const {
    const auto& idx = s.indices();
    if (!idx.empty() && idx.back() > size()) {
        throw BadInput("SymMatrix::principal_submatrix: index " + std::to_string(idx.back()) +
                       " exceeds size " + std::to_string(size()));
    }
    SymMatrix out = zero(s.size());
    for (int i = 0; i < s.size(); ++i) {
        for (int j = 0; j < s.size(); ++j) {
            out.m_(i, j) = m_(idx[static_cast<std::size_t>(i)] - 1, idx[static_cast<std::size_t>(j)] - 1);
        }
    }
    return out;
}

Rational SymMatrix::quadratic_form(const VecR& u) const {
    if (u.size() != m_.rows()) {
        throw BadInput("SymMatrix::quadratic_form: dimension mismatch");
    }
    return (u.transpose() * m_ * u)(0, 0);
}

bool SymMatrix::has_unit_diagonal() const {
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        if (m_(i, i) != 1) return false;
    }
    return true;
}

bool SymMatrix::is_nonnegative() const {
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        for (Eigen::Index j = 0; j < m_.cols(); ++j) {
            if (m_(i, j) < 0) return false;
        }
    }
    return true;
}

std::vector<Rational> SymMatrix::upper_triangle() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(size() * (size() + 1) / 2));
    for (int i = 0; i < size(); ++i) {
        for (int j = i; j < size(); ++j) out.push_back(m_(i, j));
    }
    return out;
}

bool SymMatrix::operator==(const SymMatrix& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (m_(i, j) != other.m_(i, j)) return false;
        }
    }
    return true;
}

}  // namespace copos
