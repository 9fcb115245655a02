#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "wfc/bec.hpp"

namespace wfc {

struct BoundSet {
    int m = 0;
    std::uint64_t n = 0;
    double delta = 0.0;
    double sgb_lower = -1.0;  // < 0 when not applicable
    double sgb_upper = -1.0;
    double ppv_lower = 0.0;
    double ppv_upper = 0.0;
};

namespace detail {

inline double log_binomial(std::uint64_t a, std::uint64_t b) {
    return std::lgamma(double(a) + 1) - std::lgamma(double(b) + 1) - std::lgamma(double(a - b) + 1);
}

}  // namespace detail

// Exponential upper/lower bounds on the optimal error probability for
// M = 3, 4, driven by the minimum discrepancy
//   D_min = -(2/3) log delta                       if n mod 3 = 0
//   D_min = -((floor(n/3)+floor((n+1)/3))/n) log delta  otherwise
// so the upper bound is (M-1) delta^(c n) exactly.
inline std::pair<double, double> sgb_bounds(int m, std::uint64_t n, const Channel& ch) {
    if (m != 3 && m != 4) throw std::invalid_argument("sgb_bounds: m must be 3 or 4");
    if (!(ch.delta > 0.0 && ch.delta < 1.0)) throw std::invalid_argument("sgb_bounds: need 0 < delta < 1");
    const double logd = std::log(ch.delta);
    double dmin;
    if (n % 3 == 0)
        dmin = -(2.0 / 3.0) * logd;
    else
        dmin = -(double(n / 3 + (n + 1) / 3) / double(n)) * logd;
    const double pmin = std::min(ch.delta, 1.0 - ch.delta);
    const double lower =
        (1.0 / (4.0 * m)) * std::exp(-double(n) * (dmin + std::sqrt(2.0 / double(n)) * std::log(1.0 / pmin)));
    const double upper = (m - 1) * std::exp(-double(n) * dmin);
    return {std::clamp(lower, 0.0, 1.0), std::clamp(upper, 0.0, 1.0)};
}

// Random-coding upper bound on the expected average error probability.
inline double ppv_upper(int m, std::uint64_t n, const Channel& ch) {
    if (m < 1) throw std::invalid_argument("ppv_upper: m < 1");
    check_channel(ch);
    detail::Kahan outer;
    for (std::uint64_t j = 0; j <= n; ++j) {
        // P(j of n symbols survive); pow(0, 0) = 1 covers delta = 0
        const double pj = std::exp(detail::log_binomial(n, j)) * std::pow(1.0 - ch.delta, double(j)) *
                          std::pow(ch.delta, double(n - j));
        const double q = std::ldexp(1.0, -static_cast<int>(j));  // 2^-j collision probability
        detail::Kahan inner;
        for (int k = 0; k < m; ++k)
            inner.add(double(binomial(m - 1, k)) / double(k + 1) * std::pow(q, double(k)) *
                      std::pow(1.0 - q, double(m - 1 - k)));
        outer.add(pj * inner.sum);
    }
    return std::clamp(1.0 - outer.sum, 0.0, 1.0);
}

// Converse lower bound: any (M, n) code satisfies
//   P_e >= sum_{e = floor(n - log2 M) + 1}^{n} C(n,e) delta^e (1-delta)^(n-e) (1 - 2^(n-e)/M)
inline double ppv_lower(int m, std::uint64_t n, const Channel& ch) {
    if (m < 2) throw std::invalid_argument("ppv_lower: m < 2");
    check_channel(ch);
    long long e0;
    if ((m & (m - 1)) == 0) {
        int log2m = 0;
        while ((1 << (log2m + 1)) <= m) ++log2m;
        e0 = static_cast<long long>(n) - log2m;
    } else {
        e0 = static_cast<long long>(std::floor(double(n) - std::log2(double(m)) + 1e-9));
    }
    detail::Kahan acc;
    for (long long e = std::max(e0 + 1, 0ll); e <= static_cast<long long>(n); ++e) {
        if (ch.delta == 0.0) break;
        const double logw = detail::log_binomial(n, e) + double(e) * std::log(ch.delta) +
                            double(n - e) * std::log1p(-ch.delta);
        const double frac = 1.0 - std::ldexp(1.0, static_cast<int>(n - e)) / double(m);
        if (frac <= 0.0) continue;
        acc.add(std::exp(logw) * frac);
    }
    return std::clamp(acc.sum, 0.0, 1.0);
}

inline BoundSet bound_set(int m, std::uint64_t n, const Channel& ch) {
    BoundSet b;
    b.m = m;
    b.n = n;
    b.delta = ch.delta;
    if ((m == 3 || m == 4) && ch.delta > 0.0) {
        auto [lo, hi] = sgb_bounds(m, n, ch);
        b.sgb_lower = lo;
        b.sgb_upper = hi;
    }
    b.ppv_upper = ppv_upper(m, n, ch);
    b.ppv_lower = ppv_lower(m, n, ch);
    return b;
}

}  // namespace wfc
