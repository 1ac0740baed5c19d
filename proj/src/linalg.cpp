#include "capcodes/linalg.hpp"

namespace capcodes {

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(prow, j));
        const Elem inv = f.inv(m.at(prow, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(prow, j) = f.mul(m.at(prow, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow) continue;
            const Elem factor = m.at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

std::vector<std::vector<Elem>> null_space(const Field& f, Matrix m) {
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve(const Field& f, const Matrix& m, std::span<const Elem> rhs) {
    require(rhs.size() == m.rows(), ErrorKind::LengthMismatch, "right-hand side length");
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = rhs[r];
    }
    const auto pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(n, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug.at(r, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(aug.at(r, free));
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace capcodes
