#include "jointdc/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jointdc {

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2)
        throw std::invalid_argument("Pmf: alphabet size must be >= 2");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0))
            throw std::invalid_argument("Pmf: negative or NaN entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Pmf: entries must sum to 1 within 1e-12");
}

double Pmf::log_prob(std::size_t x) const {
    double p = probs_[x];
    return p > 0.0 ? std::log(p) : -kInf;
}

bool Pmf::full_support() const {
    return std::all_of(probs_.begin(), probs_.end(),
                       [](double p) { return p > 0.0; });
}

double entropy(const Pmf& q) {
    double h = 0.0;
    for (double p : q.probs())
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

double kl_divergence(const Pmf& q, const Pmf& p) {
    if (q.alphabet_size() != p.alphabet_size())
        throw std::invalid_argument("kl_divergence: mismatched alphabets");
    double d = 0.0;
    for (std::size_t x = 0; x < q.alphabet_size(); ++x) {
        if (q(x) == 0.0) continue;
        if (p(x) == 0.0) return kInf;
        d += q(x) * std::log(q(x) / p(x));
    }
    return std::max(d, 0.0);
}

double binary_divergence(double s, double t) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw std::invalid_argument("binary_divergence: arguments outside [0,1]");
    double d = 0.0;
    if (s > 0.0) {
        if (t == 0.0) return kInf;
        d += s * std::log(s / t);
    }
    if (s < 1.0) {
        if (t == 1.0) return kInf;
        d += (1.0 - s) * std::log((1.0 - s) / (1.0 - t));
    }
    return std::max(d, 0.0);
}

Pmf tilted_family(const Pmf& p0, const Pmf& p1, double u, double v) {
    if (p0.alphabet_size() != p1.alphabet_size())
        throw std::invalid_argument("tilted_family: mismatched alphabets");
    const std::size_t k = p0.alphabet_size();
    // Work in log domain; a zero base with positive exponent kills the symbol.
    std::vector<double> logw(k, -kInf);
    double maxw = -kInf;
    auto term = [](double e, double lp) {
        if (e == 0.0) return 0.0;  // base^0 = 1 even for zero-mass symbols
        return e * lp;
    };
    for (std::size_t x = 0; x < k; ++x) {
        double lw = term(u, p0.log_prob(x)) + term(v, p1.log_prob(x));
        if (lw == kInf)
            throw std::invalid_argument(
                "tilted_family: zero base raised to a negative exponent");
        if (std::isnan(lw)) lw = -kInf;
        logw[x] = lw;
        maxw = std::max(maxw, lw);
    }
    if (maxw == -kInf)
        throw std::invalid_argument("tilted_family: all-zero unnormalized mass");
    std::vector<double> w(k);
    double z = 0.0;
    for (std::size_t x = 0; x < k; ++x) {
        w[x] = std::exp(logw[x] - maxw);
        z += w[x];
    }
    for (double& p : w) p /= z;
    return Pmf(std::move(w));
}

}  // namespace jointdc
