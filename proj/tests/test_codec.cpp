#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jointdc/codec.hpp"
#include "jointdc/random.hpp"

using namespace jointdc;

namespace {

const Pmf kP1({0.25, 0.75});

Region full_space(int n, std::size_t k) {
    Region r;
    r.n = n;
    r.alphabet_size = k;
    for_each_type(n, k, [&](const TypeComposition& t) { r.accepted.push_back(t); });
    return r;
}

std::vector<int> unpack_index(std::uint64_t v, int n, int base) {
    std::vector<int> x(n);
    for (int i = n - 1; i >= 0; --i) {
        x[i] = static_cast<int>(v % base);
        v /= base;
    }
    return x;
}

}  // namespace

TEST_CASE("kraft_check") {
    CodeLengths two_zero{{0.0, 0.0}, false};
    KraftResult bad = kraft_check(two_zero);
    CHECK(bad.sum == doctest::Approx(2.0));
    CHECK_FALSE(bad.ok);

    CodeLengths bits{{1, 2, 2}, true};
    KraftResult okbits = kraft_check(bits);
    CHECK(okbits.sum == doctest::Approx(1.0));
    CHECK(okbits.ok);

    CodeLengths nats{{std::log(2.0), std::log(2.0)}, false};
    CHECK(kraft_check(nats).ok);
}

TEST_CASE("l_star_length worked example and normalization") {
    Region full = full_space(2, 2);
    double len = l_star_length({{0, 2}, 2}, full, kP1, 1.0);
    CHECK(len == doctest::Approx(0.911492788817).epsilon(1e-9));

    // Kraft with ideal lengths is exactly tight over the region
    double sum = 0.0;
    for (const auto& t : full.accepted) {
        double l = l_star_length(t, full, kP1, 1.0);
        sum += std::exp(log_multinomial(t)) * std::exp(-l);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    // single-type singleton region: conditional probability one
    Region single;
    single.n = 3;
    single.alphabet_size = 2;
    single.accepted = {{{3, 0}, 3}};
    CHECK(l_star_length({{3, 0}, 3}, single, kP1, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS(l_star_length({{2, 1}, 3}, single, kP1, 1.0));
}

TEST_CASE("two-part code worked example") {
    std::vector<int> x = {0, 1, 1, 1};
    Bitstring bits = two_part_encode(x, 2);
    CHECK(bits.bit_count == 5);  // ceil(log2 5) + ceil(log2 4)
    CHECK(two_part_decode(bits, 4, 2) == x);
    CHECK(two_part_bit_length(empirical_type(x, 2)) == 5);

    Bitstring one = two_part_encode({1}, 2);
    CHECK(one.bit_count == 1);
    CHECK(two_part_decode(one, 1, 2) == std::vector<int>{1});
}

TEST_CASE("exhaustive round trip for all binary sequences up to n=12") {
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            std::vector<int> x = unpack_index(v, n, 2);
            Bitstring bits = two_part_encode(x, 2);
            CHECK(two_part_decode(bits, n, 2) == x);
        }
    }
}

TEST_CASE("random round trips and the universal length bound") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t k = 2 + rng.next() % 3;
        int n = 1 + static_cast<int>(rng.next() % 64);
        std::vector<double> w(k, 1.0);
        w[rng.next() % k] += 2.0;
        double s = 0;
        for (double v : w) s += v;
        for (double& v : w) v /= s;
        std::vector<int> x = sample_sequence(Pmf(w), n, rng);
        Bitstring bits = two_part_encode(x, k);
        CHECK(two_part_decode(bits, n, k) == x);
        TypeStats st = type_stats(empirical_type(x, k));
        double bound = n * st.empirical_entropy / std::log(2.0) +
                       k * std::log2(n + 1.0) + 2.0;
        CHECK(static_cast<double>(bits.bit_count) <= bound + 1e-9);
    }
}

TEST_CASE("two-part code satisfies Kraft over whole spaces") {
    for (int n : {1, 4, 9, 16}) {
        CodeLengths lengths;
        lengths.integer_bits = true;
        for_each_type(n, 2, [&](const TypeComposition& t) {
            double cls = std::exp(log_multinomial(t));
            double bits = static_cast<double>(two_part_bit_length(t));
            for (int i = 0; i < static_cast<int>(cls); ++i)
                lengths.lengths.push_back(bits);
        });
        CHECK(kraft_check(lengths).ok);
    }
}

TEST_CASE("decode rejects malformed input") {
    Bitstring bits = two_part_encode({0, 1, 1, 1}, 2);
    Bitstring truncated;
    truncated.bytes = bits.bytes;
    truncated.bit_count = 2;
    CHECK_THROWS(two_part_decode(truncated, 4, 2));
    // type index beyond the count of types
    Bitstring junk;
    junk.bytes = {0xFF};
    junk.bit_count = 5;
    CHECK_THROWS(two_part_decode(junk, 4, 2));
}

TEST_CASE("exp_moment_exact closed forms") {
    Region full2 = full_space(2, 2);
    ExpMoment m = exp_moment_exact(full2, kP1, 1.0, true);
    CHECK(m.log_value == doctest::Approx(1.247621432730).epsilon(1e-9));
    CHECK(std::exp(m.log_value) == doctest::Approx(3.482050807569).epsilon(1e-9));

    // per-n product form on the full space, n up to 16
    double per_symbol = 2.0 * std::log(std::sqrt(0.25) + std::sqrt(0.75));
    for (int n : {1, 3, 8, 16}) {
        ExpMoment mn = exp_moment_exact(full_space(n, 2), kP1, 1.0, true);
        CHECK(mn.log_value == doctest::Approx(n * per_symbol).epsilon(1e-9));
    }

    // theta -> 0 gives the zeroth conditional moment
    ExpMoment z = exp_moment_exact(full2, kP1, 1e-12, true);
    CHECK(z.log_value == doctest::Approx(0.0).epsilon(1e-9));

    // universal form oracle: 11-term binomial sum at n=10
    Region full10 = full_space(10, 2);
    double direct = 0.0;
    for (int k = 0; k <= 10; ++k) {
        TypeComposition t{{10 - k, k}, 10};
        TypeStats st = type_stats(t);
        direct += std::exp(st.log_type_size) * std::pow(0.5, 10) *
                  std::exp(10.0 * st.empirical_entropy);
    }
    ExpMoment u = exp_moment_exact(full10, Pmf({0.5, 0.5}), 1.0, false);
    CHECK(u.log_value == doctest::Approx(std::log(direct)).epsilon(1e-10));

    Region empty;
    empty.n = 2;
    empty.alphabet_size = 2;
    CHECK_THROWS(exp_moment_exact(empty, kP1, 1.0, true));
}
