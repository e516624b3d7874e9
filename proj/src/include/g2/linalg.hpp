#pragma once

#include "g2/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace g2 {

/// Row-reduces m in place over a field F. Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref_inplace(m).size();
}

/// Canonical kernel basis: the standard free-column vectors of the RREF,
/// re-reduced so two bases of the same subspace come out identical.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
    const std::size_t n = m.cols();
    auto pivots = rref_inplace(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> ker;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(n, F(0));
        v[fc] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, fc);
        ker.push_back(std::move(v));
    }
    if (ker.empty()) return ker;
    Matrix<F> kb(ker.size(), n);
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) kb(i, j) = ker[i][j];
    rref_inplace(kb);
    for (std::size_t i = 0; i < ker.size(); ++i) ker[i] = kb.row(i);
    return ker;
}

/// Least-structure exact solve of A x = b; empty if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> a, const std::vector<F>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

/// A subspace of F^n held as a canonical reduced-echelon basis; equality of
/// subspaces is representation equality.
template <class F>
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span_of(std::size_t ambient, const std::vector<std::vector<F>>& vecs) {
        Subspace s(ambient);
        if (vecs.empty()) return s;
        Matrix<F> m(vecs.size(), ambient);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].size() != ambient) throw std::invalid_argument("span_of: bad vector size");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vecs[i][j];
        }
        auto pivots = rref_inplace(m);
        for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
        return s;
    }

    static Subspace kernel_of(const Matrix<F>& m) {
        Subspace s(m.cols());
        s.basis_ = kernel_basis(m);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<F>>& basis() const { return basis_; }

    bool contains(const std::vector<F>& v) const {
        if (v.size() != ambient_) return false;
        Matrix<F> m(basis_.size(), ambient_);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_[i][j];
        std::vector<F> w = v;
        // reduce v against the echelon basis
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t lead = 0;
            while (lead < ambient_ && m(i, lead) == F(0)) ++lead;
            if (lead == ambient_) continue;
            if (!(w[lead] == F(0))) {
                F f = w[lead];
                for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * m(i, j);
            }
        }
        for (const auto& x : w)
            if (!(x == F(0))) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<std::vector<F>> basis_;
};

template <class F>
std::vector<F> operator+(std::vector<F> a, const std::vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec+: size");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class F>
std::vector<F> scaled(std::vector<F> a, const F& s) {
    for (auto& x : a) x = x * s;
    return a;
}

template <class F>
bool is_zero_vec(const std::vector<F>& v) {
    for (const auto& x : v)
        if (!(x == F(0))) return false;
    return true;
}

}  // namespace g2
