#include "percsim/convolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace percsim {

namespace {

// std::lgamma writes the global signgam on glibc, which races when windows
// are built from worker threads; lgamma_r keeps the call re-entrant.
double log_gamma(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

}  // namespace

double BinomialWindow::expectation(std::span<const std::uint32_t> counts) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        acc += pmf[i] * counts[lo + i];
    }
    return acc / mass;
}

double BinomialWindow::survival(std::uint64_t k) const {
    if (k <= lo) return 1.0;
    if (k > hi) return 0.0;
    return suffix[k - lo] / mass;
}

BinomialWindow binomial_window(std::uint64_t m, double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("bond probability must be in [0, 1]");
    }
    BinomialWindow w;
    w.m = m;
    w.p = p;
    if (p == 0.0 || m == 0) {
        w.lo = w.hi = 0;
        w.pmf = {1.0};
        w.suffix = {1.0};
        w.mass = 1.0;
        return w;
    }
    if (p == 1.0) {
        w.lo = w.hi = m;
        w.pmf = {1.0};
        w.suffix = {1.0};
        w.mass = 1.0;
        return w;
    }

    const double md = static_cast<double>(m);
    const double mean = md * p;
    const double sigma = std::sqrt(md * p * (1.0 - p));
    // 8 sigma keeps the truncated tail below 1e-11 once the mean exceeds
    // ~45; the floor covers the Poisson-like regime (tiny m*p or
    // m*(1-p)), whose tails are fatter than the normal approximation.
    const double half_width = std::max(8.0 * sigma + 2.0, 45.0);
    w.lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(mean - half_width)));
    w.hi = static_cast<std::uint64_t>(std::min(md, std::ceil(mean + half_width)));

    // Anchor at the mode, then multiply outward with the pmf ratio
    // B(n+1)/B(n) = (m-n)/(n+1) * p/(1-p).
    const auto anchor =
        static_cast<std::uint64_t>(std::clamp(std::round(mean), static_cast<double>(w.lo),
                                              static_cast<double>(w.hi)));
    const double log_anchor = log_gamma(md + 1.0) - log_gamma(static_cast<double>(anchor) + 1.0) -
                              log_gamma(md - static_cast<double>(anchor) + 1.0) +
                              static_cast<double>(anchor) * std::log(p) +
                              (md - static_cast<double>(anchor)) * std::log1p(-p);

    w.pmf.assign(w.hi - w.lo + 1, 0.0);
    const std::size_t ai = anchor - w.lo;
    w.pmf[ai] = std::exp(log_anchor);
    const double odds = p / (1.0 - p);
    for (std::size_t i = ai; i + 1 < w.pmf.size(); ++i) {
        const double n = static_cast<double>(w.lo + i);
        w.pmf[i + 1] = w.pmf[i] * (md - n) / (n + 1.0) * odds;
    }
    for (std::size_t i = ai; i > 0; --i) {
        const double n = static_cast<double>(w.lo + i);
        w.pmf[i - 1] = w.pmf[i] * n / ((md - n + 1.0) * odds);
    }
    w.suffix.assign(w.pmf.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = w.pmf.size(); i > 0; --i) {
        acc += w.pmf[i - 1];
        w.suffix[i - 1] = acc;
    }
    w.mass = acc;
    // The window width bounds true truncation by ~1e-11; on top of that
    // the anchor inherits round-off from lgamma differences of magnitude
    // m*ln(m), so the computed sum drifts by a few parts in 1e16 of that
    // (measured ~2e-9 at m = 1e6). Anything beyond this envelope means
    // the recurrence itself went wrong. Observables divide by `mass`, so
    // the drift does not bias results.
    const double tol = 1e-10 + 3e-15 * md * std::log(md + 2.0);
    if (!(w.mass >= 1.0 - tol && w.mass <= 1.0 + tol)) {
        throw std::logic_error("binomial window lost probability mass");
    }
    return w;
}

CanonicalCurve convolve_binomial(const MicroCurve& curve, std::span<const double> p_grid,
                                 std::uint32_t n_norm) {
    if (curve.lcc.size() != curve.m_edges + 1) {
        throw std::invalid_argument("convolve_binomial needs a complete microcanonical curve");
    }
    CanonicalCurve out;
    out.p.assign(p_grid.begin(), p_grid.end());
    out.n_norm = n_norm;
    out.replicas = 1;
    out.wrap_available = curve.wrap_detectable;
    out.f_mean.reserve(p_grid.size());
    out.f_stderr.assign(p_grid.size(), 0.0);
    out.wrap_prob.reserve(p_grid.size());
    for (double p : p_grid) {
        const BinomialWindow w = binomial_window(curve.m_edges, p);
        out.f_mean.push_back(w.expectation(curve.lcc) / static_cast<double>(n_norm));
        out.wrap_prob.push_back(curve.wrap_bond ? w.survival(*curve.wrap_bond) : 0.0);
    }
    return out;
}

}  // namespace percsim
