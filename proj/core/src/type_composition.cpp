#include "jointdc/type_composition.hpp"

#include <cmath>
#include <stdexcept>

namespace jointdc {

Pmf TypeComposition::empirical_pmf() const {
    std::vector<double> p(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        p[k] = static_cast<double>(counts[k]) / n;
    return Pmf(std::move(p));
}

TypeComposition empirical_type(const std::vector<int>& x,
                               std::size_t alphabet_size) {
    if (x.empty())
        throw std::invalid_argument("empirical_type: empty sequence");
    TypeComposition t;
    t.counts.assign(alphabet_size, 0);
    t.n = static_cast<int>(x.size());
    for (int s : x) {
        if (s < 0 || static_cast<std::size_t>(s) >= alphabet_size)
            throw std::invalid_argument("empirical_type: symbol out of range");
        ++t.counts[s];
    }
    return t;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_multinomial(const TypeComposition& t) {
    double v = log_factorial(t.n);
    for (int c : t.counts) v -= log_factorial(c);
    return v;
}

TypeStats type_stats(const TypeComposition& t) {
    double h = 0.0;
    for (int c : t.counts) {
        if (c == 0) continue;
        double q = static_cast<double>(c) / t.n;
        h -= q * std::log(q);
    }
    return TypeStats{log_multinomial(t), h, -static_cast<double>(t.n) * h};
}

double seq_log_prob(const Pmf& p, const TypeComposition& t) {
    double v = 0.0;
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
        if (t.counts[k] == 0) continue;
        double lp = p.log_prob(k);
        if (lp == -kInf) return -kInf;
        v += t.counts[k] * lp;
    }
    return v;
}

double count_types(int n, std::size_t alphabet_size) {
    // binomial(n + k - 1, k - 1) in floating point
    double v = 1.0;
    const int k = static_cast<int>(alphabet_size);
    for (int i = 1; i <= k - 1; ++i)
        v *= static_cast<double>(n + i) / i;
    return std::round(v) == v ? std::round(v) : v;
}

namespace {
void visit_types(TypeComposition& t, std::size_t pos, int remaining,
                 const std::function<void(const TypeComposition&)>& visit) {
    if (pos + 1 == t.counts.size()) {
        t.counts[pos] = remaining;
        visit(t);
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        t.counts[pos] = c;
        visit_types(t, pos + 1, remaining - c, visit);
    }
}
}  // namespace

void for_each_type(int n, std::size_t alphabet_size,
                   const std::function<void(const TypeComposition&)>& visit) {
    TypeComposition t;
    t.counts.assign(alphabet_size, 0);
    t.n = n;
    visit_types(t, 0, n, visit);
}

}  // namespace jointdc
