#pragma once

#include "tangles/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tangles {

// A square system of residual functionals F_j(u_1, ..., u_m), solved order by
// order. Unknown i gets its coefficients at indices unknown_start[i],
// unknown_start[i] + 1, ... up to target[i]; at step k those new coefficients
// are fixed by the residual coefficients at residual_start[j] + k, residual j
// being paired with unknown j. The coefficients below unknown_start must be
// supplied through `initial` (zero by default).
template <class R>
struct ImplicitSystem {
    using Unknowns = std::vector<TruncSeries<R>>;
    using Residuals = std::function<std::vector<TruncSeries<R>>(const Unknowns&)>;

    Var var = Var::g;
    std::vector<int> unknown_start;
    std::vector<int> residual_start;
    std::vector<int> target;
    Unknowns initial;
    Residuals residuals;
};

namespace detail {

// Solves A x = b over R by Gaussian elimination with unit pivots.
template <class R>
std::vector<R> solve_linear(std::vector<std::vector<R>> a, std::vector<R> b, int order) {
    const size_t m = b.size();
    for (size_t col = 0; col < m; ++col) {
        size_t piv = m;
        for (size_t row = col; row < m; ++row) {
            if (try_inverse(a[row][col])) {
                piv = row;
                break;
            }
        }
        if (piv == m) throw SingularLinearization(order);
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const R inv = *try_inverse(a[col][col]);
        for (size_t c = col; c < m; ++c) a[col][c] = a[col][c] * inv;
        b[col] = b[col] * inv;
        for (size_t row = 0; row < m; ++row) {
            if (row == col || is_zero(a[row][col])) continue;
            const R f = a[row][col];
            for (size_t c = col; c < m; ++c) a[row][c] -= f * a[col][c];
            b[row] -= f * b[col];
        }
    }
    return b;
}

} // namespace detail

template <class R>
std::vector<TruncSeries<R>> implicit_solve(const ImplicitSystem<R>& sys) {
    const size_t m = sys.unknown_start.size();
    if (sys.residual_start.size() != m || sys.target.size() != m) {
        throw DomainError("implicit_solve: inconsistent system dimensions");
    }
    int max_res = 0, max_target = 0;
    for (size_t i = 0; i < m; ++i) {
        max_res = std::max(max_res, sys.residual_start[i] + sys.target[i] - sys.unknown_start[i]);
        max_target = std::max(max_target, sys.target[i]);
    }

    // Coefficient storage, long enough for any working order.
    const int store = std::max(max_res, max_target) + 1;
    std::vector<std::vector<R>> coef(m, std::vector<R>(store + 1));
    for (size_t i = 0; i < sys.initial.size() && i < m; ++i) {
        const auto& s = sys.initial[i];
        for (int k = 0; k <= s.order() && k < sys.unknown_start[i]; ++k) coef[i][k] = s[k];
    }

    auto make_unknowns = [&](int work) {
        std::vector<TruncSeries<R>> u;
        u.reserve(m);
        for (size_t i = 0; i < m; ++i) {
            std::vector<R> c(coef[i].begin(), coef[i].begin() + work + 1);
            u.emplace_back(sys.var, work, std::move(c));
        }
        return u;
    };
    auto residual_coeff = [&](const std::vector<TruncSeries<R>>& res, size_t j, int idx) -> R {
        if (res.size() != m) throw DomainError("implicit_solve: residual count mismatch");
        return res[j][idx];
    };

    for (int k = 0;; ++k) {
        std::vector<size_t> active;
        for (size_t i = 0; i < m; ++i) {
            if (sys.unknown_start[i] + k <= sys.target[i]) active.push_back(i);
        }
        if (active.empty()) break;
        int work = 0;
        for (size_t i : active) work = std::max({work, sys.residual_start[i] + k, sys.unknown_start[i] + k});

        const auto base = sys.residuals(make_unknowns(work));
        const size_t a = active.size();
        std::vector<R> r0(a);
        for (size_t p = 0; p < a; ++p) r0[p] = residual_coeff(base, active[p], sys.residual_start[active[p]] + k);

        // Columns of the linearization by unit perturbations.
        std::vector<std::vector<R>> jac(a, std::vector<R>(a));
        for (size_t q = 0; q < a; ++q) {
            const size_t i = active[q];
            const int idx = sys.unknown_start[i] + k;
            coef[i][idx] += R(1L);
            const auto pert = sys.residuals(make_unknowns(work));
            coef[i][idx] -= R(1L);
            for (size_t p = 0; p < a; ++p) {
                jac[p][q] = residual_coeff(pert, active[p], sys.residual_start[active[p]] + k) - r0[p];
            }
        }
        for (auto& v : r0) v = -v;
        const auto step = detail::solve_linear(std::move(jac), std::move(r0), k);
        for (size_t q = 0; q < a; ++q) {
            const size_t i = active[q];
            coef[i][sys.unknown_start[i] + k] += step[q];
        }
    }

    // Substitute back; every residual must vanish through its final index.
    int work = 0;
    for (size_t i = 0; i < m; ++i) {
        work = std::max({work, sys.residual_start[i] + sys.target[i] - sys.unknown_start[i], sys.target[i]});
    }
    const auto fin = sys.residuals(make_unknowns(work));
    for (size_t j = 0; j < m; ++j) {
        const int last = sys.residual_start[j] + sys.target[j] - sys.unknown_start[j];
        for (int idx = 0; idx <= last; ++idx) {
            if (!is_zero(fin[j][idx])) {
                throw SingularLinearization(idx, "residual " + std::to_string(j) + " does not vanish after the solve (" +
                                                     ring_str(fin[j][idx]) + ")");
            }
        }
    }

    std::vector<TruncSeries<R>> out;
    for (size_t i = 0; i < m; ++i) {
        std::vector<R> c(coef[i].begin(), coef[i].begin() + sys.target[i] + 1);
        out.emplace_back(sys.var, sys.target[i], std::move(c));
    }
    return out;
}

} // namespace tangles
