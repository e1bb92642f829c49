#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jointdc/pmf.hpp"
#include "jointdc/random.hpp"
#include "jointdc/type_composition.hpp"

using namespace jointdc;

TEST_CASE("pmf validation") {
    CHECK_THROWS_AS(Pmf({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Pmf({-0.1, 1.1}), std::invalid_argument);
    Pmf p({0.25, 0.75});
    CHECK(p(1) == 0.75);
    CHECK(p.log_prob(1) == doctest::Approx(std::log(0.75)).epsilon(1e-14));
    CHECK(Pmf({1.0, 0.0}).log_prob(1) == -kInf);
    CHECK(p.full_support());
    CHECK_FALSE(Pmf({1.0, 0.0}).full_support());
}

TEST_CASE("entropy") {
    CHECK(entropy(Pmf({0.5, 0.5})) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(entropy(Pmf({1.0, 0.0})) == 0.0);
    CHECK(entropy(Pmf({0.25, 0.75})) == doctest::Approx(0.562335144619).epsilon(1e-10));
}

TEST_CASE("kl divergence") {
    Pmf p1({0.25, 0.75}), p0({0.5, 0.5});
    CHECK(kl_divergence(p1, p1) == doctest::Approx(0.0));
    CHECK(kl_divergence(p1, p0) == doctest::Approx(0.130812035941).epsilon(1e-10));
    CHECK(kl_divergence(p0, Pmf({1.0, 0.0})) == kInf);
    CHECK_THROWS_AS(kl_divergence(p0, Pmf({0.2, 0.3, 0.5})), std::invalid_argument);
}

TEST_CASE("binary divergence") {
    CHECK(binary_divergence(0.3, 0.3) == doctest::Approx(0.0));
    CHECK(binary_divergence(0.630930, 0.75) == doctest::Approx(0.034688185).epsilon(1e-5));
    CHECK(binary_divergence(0.721950, 0.5) == doctest::Approx(0.102045007491).epsilon(1e-9));
    CHECK(binary_divergence(0.5, 1.0) == kInf);
    CHECK(binary_divergence(1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("kl nonnegativity on random pairs") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        double a = 0.05 + 0.9 * rng.next_double();
        double b = 0.05 + 0.9 * rng.next_double();
        Pmf q({a, 1 - a}), p({b, 1 - b});
        double d = kl_divergence(q, p);
        CHECK(d >= 0.0);
        if (std::abs(a - b) > 1e-6) CHECK(d > 0.0);
    }
}

TEST_CASE("tilted family") {
    Pmf p0({0.5, 0.5}), p1({0.25, 0.75});
    Pmf a = tilted_family(p0, p1, 0.0, 1.0);
    CHECK(a(0) == doctest::Approx(0.25).epsilon(1e-14));
    Pmf b = tilted_family(p0, p1, 1.0, 0.0);
    CHECK(b(0) == doctest::Approx(0.5).epsilon(1e-14));
    Pmf c = tilted_family(p0, p1, 0.0, 0.12279);
    CHECK(c(0) == doctest::Approx(0.46632).epsilon(2e-4));
    CHECK(c(1) == doctest::Approx(0.53368).epsilon(2e-4));
    // zero-base symbol with positive exponent drops out
    Pmf d = tilted_family(Pmf({1.0, 0.0}), p1, 1.0, 0.5);
    CHECK(d(1) == 0.0);
    // disjoint supports: the product mass vanishes everywhere
    CHECK_THROWS(tilted_family(Pmf({1.0, 0.0}), Pmf({0.0, 1.0}), 1.0, 1.0));
}

TEST_CASE("tilted interpolation path monotone in u") {
    Pmf p0({0.5, 0.5}), p1({0.25, 0.75});
    double prev = kInf;
    for (double u = 0.0; u <= 1.0001; u += 0.05) {
        Pmf q = tilted_family(p0, p1, u, 1.0 - u);
        double m = 0.0;
        for (std::size_t x = 0; x < 2; ++x)
            m += q(x) * (p1.log_prob(x) - p0.log_prob(x));
        CHECK(m <= prev + 1e-12);
        prev = m;
    }
}

TEST_CASE("empirical type") {
    TypeComposition t = empirical_type({0, 1, 1, 1}, 2);
    CHECK(t.counts == std::vector<int>{1, 3});
    CHECK(t.n == 4);
    TypeComposition u = empirical_type({2, 0, 2}, 3);
    CHECK(u.counts == std::vector<int>{1, 0, 2});
    CHECK_THROWS(empirical_type({}, 2));
    CHECK_THROWS(empirical_type({2}, 2));
}

TEST_CASE("type stats") {
    TypeStats s = type_stats({{1, 3}, 4});
    CHECK(s.log_type_size == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(s.empirical_entropy == doctest::Approx(0.562335144619).epsilon(1e-10));
    CHECK(s.max_iid_log_likelihood == doctest::Approx(-2.249340578475).epsilon(1e-10));
    CHECK(type_stats({{4, 0}, 4}).log_type_size == doctest::Approx(0.0));
    CHECK(type_stats({{2, 2}, 4}).log_type_size ==
          doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("seq_log_prob") {
    Pmf p({0.25, 0.75});
    CHECK(seq_log_prob(p, {{1, 3}, 4}) ==
          doctest::Approx(-2.249340578475).epsilon(1e-10));
    CHECK(seq_log_prob(Pmf({1.0, 0.0}), {{0, 1}, 1}) == -kInf);
    CHECK(seq_log_prob(Pmf({0.5, 0.5}), {{3, 4}, 7}) ==
          doctest::Approx(-7 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("seq_log_prob identity with entropy + divergence") {
    SplitMix64 rng(11);
    for (int i = 0; i < 100; ++i) {
        double a = 0.05 + 0.9 * rng.next_double();
        Pmf p({a, 1 - a});
        int n = 1 + static_cast<int>(rng.next() % 50);
        int k = static_cast<int>(rng.next() % (n + 1));
        TypeComposition t{{n - k, k}, n};
        Pmf hat = t.empirical_pmf();
        double lhs = seq_log_prob(p, t);
        double rhs = -t.n * (entropy(hat) + kl_divergence(hat, p));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("method-of-types bounds on the type class size") {
    for (int n : {1, 5, 50, 200, 500}) {
        for (int k = 0; k <= n; k += std::max(1, n / 7)) {
            TypeStats s = type_stats({{n - k, k}, n});
            CHECK(s.log_type_size <= n * s.empirical_entropy + 1e-9);
            CHECK(s.log_type_size >=
                  n * s.empirical_entropy - 2.0 * std::log(n + 1.0) - 1e-9);
        }
    }
}

TEST_CASE("type enumeration covers the simplex and sums to one") {
    CHECK(count_types(4, 2) == 5.0);
    CHECK(count_types(3, 3) == 10.0);
    for (std::size_t k : {2, 3}) {
        Pmf p = k == 2 ? Pmf({0.3, 0.7}) : Pmf({0.2, 0.3, 0.5});
        for (int n : {1, 7, 30, 60}) {
            double total = 0.0;
            int seen = 0;
            for_each_type(n, k, [&](const TypeComposition& t) {
                ++seen;
                total += std::exp(log_multinomial(t) + seq_log_prob(p, t));
            });
            CHECK(seen == static_cast<int>(count_types(n, k)));
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("splitmix64 determinism") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    double u = SplitMix64(1).next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    // sampling respects the distribution roughly
    SplitMix64 rng(3);
    Pmf p({0.25, 0.75});
    int ones = 0;
    for (int i = 0; i < 100000; ++i) ones += sample_symbol(p, rng);
    CHECK(ones / 100000.0 == doctest::Approx(0.75).epsilon(0.01));
}
