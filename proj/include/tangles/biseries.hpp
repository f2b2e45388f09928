#pragma once

#include "tangles/errors.hpp"
#include "tangles/ring.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tangles {

// Bivariate truncated series sum c_{jk} u^j w^k keeping terms with
// wu*j + ww*k <= order. Default weights (1, 1) give total-degree truncation.
template <class R>
class BiSeries {
public:
    using Key = std::pair<int, int>;

    BiSeries() = default;
    explicit BiSeries(int order, int wu = 1, int ww = 1) : order_(order), wu_(wu), ww_(ww) {}

    static BiSeries constant(int order, const R& c, int wu = 1, int ww = 1) {
        BiSeries s(order, wu, ww);
        s.add(0, 0, c);
        return s;
    }
    static BiSeries monomial(int order, int j, int k, const R& c = R(1L), int wu = 1, int ww = 1) {
        BiSeries s(order, wu, ww);
        s.add(j, k, c);
        return s;
    }

    int order() const { return order_; }
    int weight_u() const { return wu_; }
    int weight_w() const { return ww_; }
    int weight(int j, int k) const { return wu_ * j + ww_ * k; }
    bool in_range(int j, int k) const { return j >= 0 && k >= 0 && weight(j, k) <= order_; }
    const std::map<Key, R>& terms() const { return terms_; }

    R coeff(int j, int k) const {
        if (!in_range(j, k)) {
            throw TruncationError("bivariate coefficient (" + std::to_string(j) + "," + std::to_string(k) +
                                  ") is beyond the truncation order " + std::to_string(order_));
        }
        auto it = terms_.find({j, k});
        return it == terms_.end() ? R() : it->second;
    }

    void add(int j, int k, const R& c) {
        if (!in_range(j, k) || is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(Key{j, k}, c);
        if (!fresh) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // Lowest weight of a nonzero term, or order + 1.
    int valuation() const {
        int v = order_ + 1;
        for (const auto& [key, c] : terms_) v = std::min(v, weight(key.first, key.second));
        return v;
    }

    BiSeries truncated(int order) const {
        if (order > order_) throw TruncationError("cannot extend a bivariate series");
        BiSeries r(order, wu_, ww_);
        for (const auto& [key, c] : terms_) r.add(key.first, key.second, c);
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.order_, b.order_), a.wu_, a.ww_);
        check_weights(a, b);
        for (const auto& [key, c] : a.terms_) r.add(key.first, key.second, c);
        for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, c);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a) {
        BiSeries r(a.order_, a.wu_, a.ww_);
        for (const auto& [key, c] : a.terms_) r.add(key.first, key.second, -c);
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }
    friend BiSeries operator*(const BiSeries& a, const R& s) {
        BiSeries r(a.order_, a.wu_, a.ww_);
        for (const auto& [key, c] : a.terms_) r.add(key.first, key.second, c * s);
        return r;
    }
    friend BiSeries operator*(const R& s, const BiSeries& a) { return a * s; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        check_weights(a, b);
        const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
        BiSeries r(order, a.wu_, a.ww_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
        return r;
    }
    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.order_ == b.order_ && a.wu_ == b.wu_ && a.ww_ == b.ww_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    // Every coefficient through the truncation order vanishes.
    bool is_zero_series() const { return terms_.empty(); }

private:
    static void check_weights(const BiSeries& a, const BiSeries& b) {
        if (a.wu_ != b.wu_ || a.ww_ != b.ww_) throw VariableMismatch("bivariate series with different weights");
    }

    int order_ = 0;
    int wu_ = 1;
    int ww_ = 1;
    std::map<Key, R> terms_;
};

template <class R>
void require_zero_constant(const BiSeries<R>& a, const char* what) {
    if (!is_zero(a.coeff(0, 0))) throw NonzeroConstantTerm(std::string(what) + ": nonzero constant term");
}

// sum_{m >= 1} (sign)^{m+1} h^m for h with zero constant term.
template <class R>
BiSeries<R> bi_geometric(const BiSeries<R>& h, int sign) {
    BiSeries<R> acc(h.order(), h.weight_u(), h.weight_w());
    BiSeries<R> power = h;
    R coef(1L);
    while (!power.is_zero_series()) {
        acc = acc + power * coef;
        power = (power * h).truncated(h.order());
        if (sign < 0) coef = -coef;
    }
    return acc.truncated(h.order());
}

template <class R>
BiSeries<R> series_geom(const BiSeries<R>& h) {
    require_zero_constant(h, "series_geom");
    return bi_geometric(h, 1);
}

template <class R>
BiSeries<R> series_igeom(const BiSeries<R>& g) {
    require_zero_constant(g, "series_igeom");
    return bi_geometric(g, -1);
}

// 1/a for a with unit constant term.
template <class R>
BiSeries<R> series_inverse(const BiSeries<R>& a) {
    auto inv0 = try_inverse(a.coeff(0, 0));
    if (!inv0) throw NonUnitLeadingCoefficient("bivariate constant term is not a unit");
    // 1/a = inv0 / (1 + h) with h = inv0*a - 1.
    auto h = a * *inv0 - BiSeries<R>::constant(a.order(), R(1L), a.weight_u(), a.weight_w());
    auto one = BiSeries<R>::constant(a.order(), R(1L), a.weight_u(), a.weight_w());
    // 1/(1 + h) = 1 - h/(1 + h)
    return (one - series_igeom(h)) * *inv0;
}

// x(a, b) = sum x_jk a^j b^k for a, b with zero constant terms.
template <class R>
BiSeries<R> bi_compose(const BiSeries<R>& x, const BiSeries<R>& a, const BiSeries<R>& b) {
    require_zero_constant(a, "bi_compose");
    require_zero_constant(b, "bi_compose");
    const int order = std::min({x.order(), a.order(), b.order()});
    const auto one = BiSeries<R>::constant(order, R(1L), x.weight_u(), x.weight_w());
    std::vector<BiSeries<R>> pa{one}, pb{one};
    BiSeries<R> acc(order, x.weight_u(), x.weight_w());
    for (const auto& [key, c] : x.terms()) {
        while (static_cast<int>(pa.size()) <= key.first) pa.push_back((pa.back() * a).truncated(order));
        while (static_cast<int>(pb.size()) <= key.second) pb.push_back((pb.back() * b).truncated(order));
        acc = acc + (pa[key.first] * pb[key.second]).truncated(order) * c;
    }
    return acc.truncated(order);
}

// Inverse of the map (u, w) = (a(g1, g2), b(g1, g2)) with a = g1 + ..., b = g2 + ...
// (both linear parts the identity). Returns (g1(u, w), g2(u, w)).
template <class R>
std::pair<BiSeries<R>, BiSeries<R>> bi_invert(const BiSeries<R>& a, const BiSeries<R>& b) {
    const int order = std::min(a.order(), b.order());
    const int wu = a.weight_u(), ww = a.weight_w();
    const auto u = BiSeries<R>::monomial(order, 1, 0, R(1L), wu, ww);
    const auto w = BiSeries<R>::monomial(order, 0, 1, R(1L), wu, ww);
    if (a.coeff(1, 0) != R(1L) || a.coeff(0, 1) != R() || b.coeff(0, 1) != R(1L) || b.coeff(1, 0) != R()) {
        throw DomainError("bi_invert: linear part must be the identity");
    }
    const auto na = a - u, nb = b - w;
    auto g1 = u, g2 = w;
    for (int it = 0; it <= order; ++it) {
        auto next1 = u - bi_compose(na, g1, g2);
        auto next2 = w - bi_compose(nb, g1, g2);
        g1 = std::move(next1);
        g2 = std::move(next2);
    }
    return {g1, g2};
}

} // namespace tangles
