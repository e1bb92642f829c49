#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace jointdc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Probability mass function over a finite alphabet {0, ..., k-1}, k >= 2.
// Entries must be nonnegative and sum to 1 within 1e-12. Immutable after
// construction.
class Pmf {
public:
    explicit Pmf(std::vector<double> probs);

    double operator()(std::size_t x) const { return probs_[x]; }
    std::size_t alphabet_size() const { return probs_.size(); }
    const std::vector<double>& probs() const { return probs_; }

    // ln p(x), with -inf for zero-mass symbols.
    double log_prob(std::size_t x) const;

    bool full_support() const;

private:
    std::vector<double> probs_;
};

// -sum q(x) ln q(x), with 0 ln 0 = 0. Result in [0, ln k].
double entropy(const Pmf& q);

// sum q(x) ln(q(x)/p(x)); +inf iff q puts mass where p has none.
// Throws std::invalid_argument on mismatched alphabets.
double kl_divergence(const Pmf& q, const Pmf& p);

// s ln(s/t) + (1-s) ln((1-s)/(1-t)) for s in [0,1], t in [0,1].
// +inf when t is degenerate and s disagrees.
double binary_divergence(double s, double t);

// Normalized Q(x) proportional to p0(x)^u * p1(x)^v. Symbols where a base is
// zero with positive exponent get probability 0. Throws if the unnormalized
// mass vanishes everywhere.
Pmf tilted_family(const Pmf& p0, const Pmf& p1, double u, double v);

}  // namespace jointdc
