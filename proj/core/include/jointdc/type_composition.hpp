#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jointdc/pmf.hpp"

namespace jointdc {

// Symbol counts of a length-n sequence: the empirical type. counts sum to n.
struct TypeComposition {
    std::vector<int> counts;
    int n = 0;

    std::size_t alphabet_size() const { return counts.size(); }

    // Relative frequencies as a Pmf.
    Pmf empirical_pmf() const;
};

// Empirical type of a symbol sequence. Throws on empty input or on a symbol
// outside {0, ..., alphabet_size-1}.
TypeComposition empirical_type(const std::vector<int>& x,
                               std::size_t alphabet_size);

struct TypeStats {
    double log_type_size;           // ln multinomial(n; counts), exact in log domain
    double empirical_entropy;       // nats/symbol
    double max_iid_log_likelihood;  // -n * empirical_entropy
};

TypeStats type_stats(const TypeComposition& t);

// ln n! via lgamma of an integer argument.
double log_factorial(int n);

// ln multinomial(n; counts).
double log_multinomial(const TypeComposition& t);

// sum_k counts[k] * ln p(k); -inf on support violation. Equals the
// log-probability of every sequence in the type class.
double seq_log_prob(const Pmf& p, const TypeComposition& t);

// Number of compositions of n into k nonnegative parts, i.e.
// binomial(n + k - 1, k - 1), as a double (exact for small arguments,
// may overflow to +inf for large ones; callers cap well below that).
double count_types(int n, std::size_t alphabet_size);

// Visits every TypeComposition of length n over the given alphabet in
// lexicographic order of the count vector.
void for_each_type(int n, std::size_t alphabet_size,
                   const std::function<void(const TypeComposition&)>& visit);

}  // namespace jointdc
