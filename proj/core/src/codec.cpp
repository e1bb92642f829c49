#include "jointdc/codec.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace jointdc {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of compositions of m into `parts` nonnegative parts.
BigInt composition_count(int m, int parts) {
    return big_binomial(m + parts - 1, parts - 1);
}

BigInt big_multinomial(const std::vector<int>& counts) {
    BigInt r = 1;
    int rem = 0;
    for (int c : counts) rem += c;
    for (int c : counts) {
        r *= big_binomial(rem, c);
        rem -= c;
    }
    return r;
}

std::size_t ceil_log2(const BigInt& v) {
    if (v <= 1) return 0;
    BigInt w = v - 1;
    return boost::multiprecision::msb(w) + 1;
}

// Lexicographic rank of a count vector among all compositions of n.
BigInt type_rank(const TypeComposition& t) {
    BigInt rank = 0;
    int rem = t.n;
    const int k = static_cast<int>(t.counts.size());
    for (int i = 0; i < k - 1; ++i) {
        for (int v = 0; v < t.counts[i]; ++v)
            rank += composition_count(rem - v, k - i - 1);
        rem -= t.counts[i];
    }
    return rank;
}

TypeComposition type_unrank(BigInt rank, int n, std::size_t alphabet_size) {
    TypeComposition t;
    t.n = n;
    t.counts.assign(alphabet_size, 0);
    int rem = n;
    const int k = static_cast<int>(alphabet_size);
    for (int i = 0; i < k - 1; ++i) {
        int v = 0;
        for (;; ++v) {
            BigInt block = composition_count(rem - v, k - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        t.counts[i] = v;
        rem -= v;
    }
    t.counts[k - 1] = rem;
    return t;
}

// Lexicographic rank of x within its type class (enumerative coding).
BigInt sequence_rank(const std::vector<int>& x, std::vector<int> counts) {
    BigInt rank = 0;
    for (int xi : x) {
        for (int s = 0; s < xi; ++s) {
            if (counts[s] == 0) continue;
            --counts[s];
            rank += big_multinomial(counts);
            ++counts[s];
        }
        --counts[xi];
    }
    return rank;
}

std::vector<int> sequence_unrank(BigInt rank, std::vector<int> counts, int n) {
    std::vector<int> x;
    x.reserve(n);
    for (int pos = 0; pos < n; ++pos) {
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            --counts[s];
            BigInt block = big_multinomial(counts);
            if (rank < block) {
                x.push_back(static_cast<int>(s));
                break;
            }
            rank -= block;
            ++counts[s];
        }
    }
    return x;
}

class BitWriter {
public:
    void push_value(const BigInt& v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i) {
            bool bit = boost::multiprecision::bit_test(v, static_cast<unsigned>(width - 1 - i));
            push_bit(bit);
        }
    }
    void push_bit(bool b) {
        if (out_.bit_count % 8 == 0) out_.bytes.push_back(0);
        if (b) out_.bytes.back() |= static_cast<std::uint8_t>(1u << (7 - out_.bit_count % 8));
        ++out_.bit_count;
    }
    Bitstring take() { return std::move(out_); }

private:
    Bitstring out_;
};

class BitReader {
public:
    explicit BitReader(const Bitstring& bits) : bits_(bits) {}
    BigInt read_value(std::size_t width) {
        BigInt v = 0;
        for (std::size_t i = 0; i < width; ++i) {
            if (pos_ >= bits_.bit_count)
                throw std::invalid_argument("two_part_decode: bitstring too short");
            v <<= 1;
            if (bits_.bit(pos_++)) v |= 1;
        }
        return v;
    }

private:
    const Bitstring& bits_;
    std::size_t pos_ = 0;
};

double log_sum_exp_acc(double acc, double term) {
    if (term == -kInf) return acc;
    if (acc == -kInf) return term;
    double m = std::max(acc, term);
    return m + std::log(std::exp(acc - m) + std::exp(term - m));
}

}  // namespace

KraftResult kraft_check(const CodeLengths& lengths) {
    double sum = 0.0;
    for (double l : lengths.lengths)
        sum += lengths.integer_bits ? std::exp2(-l) : std::exp(-l);
    double limit = lengths.integer_bits ? 1.0 : 1.0 + 1e-9;
    return KraftResult{sum, sum <= limit};
}

double l_star_length(const TypeComposition& t, const Region& region,
                     const Pmf& p1, double theta) {
    bool member = false;
    double log_norm = -kInf;
    for (const auto& a : region.accepted) {
        log_norm = log_sum_exp_acc(
            log_norm, log_multinomial(a) + seq_log_prob(p1, a) / (1.0 + theta));
        if (a.counts == t.counts) member = true;
    }
    if (!member)
        throw std::invalid_argument("l_star_length: type not in region");
    return log_norm - seq_log_prob(p1, t) / (1.0 + theta);
}

std::size_t two_part_bit_length(const TypeComposition& t) {
    return ceil_log2(composition_count(t.n, static_cast<int>(t.counts.size()))) +
           ceil_log2(big_multinomial(t.counts));
}

Bitstring two_part_encode(const std::vector<int>& x,
                          std::size_t alphabet_size) {
    TypeComposition t = empirical_type(x, alphabet_size);
    BigInt total_types = composition_count(t.n, static_cast<int>(alphabet_size));
    BigInt class_size = big_multinomial(t.counts);
    BitWriter w;
    w.push_value(type_rank(t), ceil_log2(total_types));
    w.push_value(sequence_rank(x, t.counts), ceil_log2(class_size));
    return w.take();
}

std::vector<int> two_part_decode(const Bitstring& bits, int n,
                                 std::size_t alphabet_size) {
    if (n <= 0)
        throw std::invalid_argument("two_part_decode: n must be positive");
    BigInt total_types = composition_count(n, static_cast<int>(alphabet_size));
    BitReader r(bits);
    BigInt trank = r.read_value(ceil_log2(total_types));
    if (trank >= total_types)
        throw std::invalid_argument("two_part_decode: type index out of range");
    TypeComposition t = type_unrank(trank, n, alphabet_size);
    BigInt class_size = big_multinomial(t.counts);
    BigInt srank = r.read_value(ceil_log2(class_size));
    if (srank >= class_size)
        throw std::invalid_argument("two_part_decode: sequence rank out of range");
    return sequence_unrank(srank, t.counts, n);
}

ExpMoment exp_moment_exact(const Region& region, const Pmf& p, double theta,
                           bool with_l_star) {
    if (region.accepted.empty())
        throw std::invalid_argument("exp_moment_exact: empty region");
    ExpMoment out;
    out.with_l_star = with_l_star;
    if (with_l_star) {
        double log_s = -kInf, log_p_omega = -kInf;
        for (const auto& t : region.accepted) {
            double lt = log_multinomial(t);
            double lp = seq_log_prob(p, t);
            log_s = log_sum_exp_acc(log_s, lt + lp / (1.0 + theta));
            log_p_omega = log_sum_exp_acc(log_p_omega, lt + lp);
        }
        out.log_value = (1.0 + theta) * log_s - log_p_omega;
    } else {
        double acc = -kInf;
        for (const auto& t : region.accepted) {
            double h = type_stats(t).empirical_entropy;
            acc = log_sum_exp_acc(acc, log_multinomial(t) + seq_log_prob(p, t) +
                                           t.n * theta * h);
        }
        out.log_value = acc;
    }
    return out;
}

}  // namespace jointdc
