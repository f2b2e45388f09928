#include "tangles/asymptotics.hpp"

#include "tangles/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>

namespace tangles {

namespace {

// e_k = k r_k - (k-1) r_{k-1} with r_k = a_{k-1}/a_k; a[i] is a_{i+1}.
std::vector<Real> ratio_extrapolants(const std::vector<Real>& a) {
    std::vector<Real> r(a.size() + 1), out;
    for (size_t k = 2; k <= a.size(); ++k) r[k] = a[k - 2] / a[k - 1];
    for (size_t k = 3; k <= a.size(); ++k) out.push_back(Real(k) * r[k] - Real(k - 1) * r[k - 1]);
    return out;
}

Real binomial(int n, int k) {
    Real r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::vector<ReferenceConstant> reference_constants() {
    const Real pi = boost::math::constants::pi<Real>();
    return {
        {"oriented, flyped", "6.28329764 (critical solve)", Real("6.28329764")},
        {"oriented, unflyped", "16/(pi(pi-4)^2)", 16 / (pi * (pi - 4) * (pi - 4))},
        {"n = 1, flyped", "(101+sqrt(21001))/40", (101 + sqrt(Real(21001))) / 40},
        {"n = 1, unflyped", "27/4", Real(27) / 4},
    };
}

GrowthEstimate growth_fit(const std::vector<Rational>& coeffs, const Real& exponent, bool log_correction,
                          int first_index) {
    size_t nonzero_tail = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend() && *it != 0; ++it) ++nonzero_tail;
    if (nonzero_tail < 6) throw InsufficientData("growth_fit needs at least 6 nonzero trailing coefficients");
    const size_t start = coeffs.size() - nonzero_tail;

    GrowthEstimate est;
    est.exponent = exponent;
    est.log_correction = log_correction;
    est.references = reference_constants();
    for (size_t i = 1; i < coeffs.size(); ++i) {
        est.ratios.push_back(coeffs[i - 1] == 0 ? Real(0) : to_real(coeffs[i]) / to_real(coeffs[i - 1]));
    }
    // Corrected ratios indexed by p; log p / log(p-1) needs p >= 3.
    std::vector<std::pair<int, Real>> corr;
    for (size_t i = start + 1; i < coeffs.size(); ++i) {
        const int p = first_index + static_cast<int>(i);
        if (log_correction && p < 3) continue;
        Real model = pow(Real(p) / Real(p - 1), exponent);
        if (log_correction) model *= log(Real(p - 1)) / log(Real(p));
        corr.emplace_back(p, est.ratios[i - 1] / model);
        est.corrected.push_back(corr.back().second);
    }
    for (size_t i = 1; i < corr.size(); ++i) {
        const auto [p, rp] = corr[i];
        est.extrapolants.push_back(Real(p) * rp - Real(p - 1) * corr[i - 1].second);
    }
    if (est.extrapolants.size() < 3) throw InsufficientData("not enough ratios to extrapolate");
    est.rate = est.extrapolants.back();
    const auto tail = std::vector<Real>(est.extrapolants.end() - 3, est.extrapolants.end());
    est.error_bar = *std::max_element(tail.begin(), tail.end()) - *std::min_element(tail.begin(), tail.end());
    return est;
}

std::vector<LinkEstimate> link_count_estimate(const std::vector<Rational>& gamma_b, int first_index) {
    std::vector<LinkEstimate> out;
    for (size_t i = 0; i < gamma_b.size(); ++i) {
        const int p = first_index + static_cast<int>(i) + 1;
        out.push_back({p, gamma_b[i] / Rational(p)});
    }
    return out;
}

SingularityEstimate singularity_estimate(const std::vector<Real>& a) {
    if (a.size() < 6) throw InsufficientData("singularity_estimate needs at least 6 coefficients");
    SingularityEstimate est;
    const size_t N = a.size();
    est.negative_dominant = (a[N - 1] < 0) != (a[N - 2] < 0) && (a[N - 2] < 0) != (a[N - 3] < 0);
    if (!est.negative_dominant) {
        est.extrapolants = ratio_extrapolants(a);
        est.radius = est.extrapolants.back();
        return est;
    }
    const auto neg = ratio_extrapolants(a);
    const Real R = -neg.back();
    est.negative_radius = R;
    // z^k = w^k (1 - w/R)^{-k} = sum_m C(k+m-1, m) R^{-m} w^{k+m}
    std::vector<Real> w(N);
    for (size_t k = 1; k <= N; ++k) {
        Real rpow = 1;
        for (size_t m = 0; k + m <= N; ++m) {
            w[k + m - 1] += a[k - 1] * binomial(static_cast<int>(k + m - 1), static_cast<int>(m)) * rpow;
            rpow /= R;
        }
    }
    est.extrapolants = ratio_extrapolants(w);
    const Real ws = est.extrapolants.back();
    est.radius = ws / (1 - ws / R);
    return est;
}

} // namespace tangles
