#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jointdc/analysis.hpp"

using namespace jointdc;

namespace {

const Pmf kP0({0.5, 0.5});
const Pmf kP1({0.25, 0.75});

RuleSpec hat_example() {
    RuleSpec r;
    r.kind = RuleKind::Hat;
    r.theta = 1.0;
    r.alpha = 0.6;
    r.beta = 0.5;
    return r;
}

RuleContext known_ctx() {
    RuleContext ctx;
    ctx.p0 = kP0;
    ctx.p1 = kP1;
    return ctx;
}

}  // namespace

TEST_CASE("exact_region_prob") {
    Region full;
    full.n = 6;
    full.alphabet_size = 2;
    for_each_type(6, 2, [&](const TypeComposition& t) { full.accepted.push_back(t); });
    CHECK(exact_region_prob(full, kP0) == doctest::Approx(0.0).epsilon(1e-12));

    Region empty;
    empty.n = 6;
    empty.alphabet_size = 2;
    CHECK(exact_region_prob(empty, kP0) == -kInf);

    // binomial tail: counts[1] >= 15, n = 20, uniform source
    Region tail;
    tail.n = 20;
    tail.alphabet_size = 2;
    for (int k = 15; k <= 20; ++k) tail.accepted.push_back({{20 - k, k}, 20});
    CHECK(exact_region_prob(tail, kP0) ==
          doctest::Approx(std::log(21700.0 / 1048576.0)).epsilon(1e-12));
    CHECK(exact_region_prob(tail, kP0) ==
          doctest::Approx(-3.877876071670).epsilon(1e-9));
}

TEST_CASE("monte carlo determinism and calibration at the worked point") {
    RuleSpec r = hat_example();
    RuleContext ctx = known_ctx();
    MonteCarloResult a =
        monte_carlo_region_prob(r, ctx, SampleSource::P0, 20, 200000, 99);
    MonteCarloResult b =
        monte_carlo_region_prob(r, ctx, SampleSource::P0, 20, 200000, 99);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    double exact = std::exp(-3.877876071670);
    CHECK(std::abs(a.estimate - exact) <= 3.0 * a.std_error + 1e-12);

    // a rule that accepts everything estimates exactly one
    RuleSpec all;
    all.kind = RuleKind::UBlind;
    all.theta0 = all.theta1 = 1.0;
    all.lambda0 = all.lambda1 = 1.0;
    MonteCarloResult full =
        monte_carlo_region_prob(all, ctx, SampleSource::P1, 10, 1000, 1);
    CHECK(full.estimate == 1.0);
    CHECK(full.std_error == 0.0);
}

TEST_CASE("exponent_fit recovers exact models") {
    std::vector<std::pair<int, double>> pure;
    for (int n : {10, 20, 40, 80, 160}) pure.push_back({n, -0.1 * n});
    ExponentFit f1 = exponent_fit(pure);
    CHECK(f1.slope == doctest::Approx(0.1).epsilon(1e-9));

    std::vector<std::pair<int, double>> with_log;
    for (int n : {10, 20, 40, 80, 160})
        with_log.push_back({n, -0.1 * n - 2.0 * std::log(n)});
    ExponentFit f2 = exponent_fit(with_log);
    CHECK(f2.slope == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(f2.intercept_log_term == doctest::Approx(2.0).epsilon(1e-6));

    CHECK_THROWS(exponent_fit({{10, -1.0}, {20, -2.0}}));
}

TEST_CASE("binary_q_threshold") {
    QThreshold q = binary_q_threshold(1.0, 0.6, 0.5);
    CHECK(q.q == doctest::Approx(0.721953676234).epsilon(1e-9));
    CHECK(q.branch == 2);
    CHECK(q.in_regime);

    // branch equality at beta = ln 2 (theta = 1, alpha = 0)
    QThreshold left = binary_q_threshold(1.0, 0.0, std::log(2.0) - 1e-6);
    QThreshold right = binary_q_threshold(1.0, 0.0, std::log(2.0) + 1e-6);
    CHECK(left.branch != right.branch);

    QThreshold degen = binary_q_threshold(1.0, 0.0, 1e-6);
    CHECK(degen.q > 1.0);
    CHECK_FALSE(degen.in_regime);
}

TEST_CASE("sweep finds exactly one kink at beta = ln 2") {
    SweepSpec spec;
    spec.variable = SweepVariable::Beta;
    spec.from = 0.6;
    spec.to = 0.8;
    spec.steps = 201;  // step 1e-3
    spec.theta = 1.0;
    spec.alpha = 0.0;
    SweepResult res = sweep_binary_example(spec);
    REQUIRE(res.kinks.size() == 1);
    CHECK(std::abs(res.kinks[0].location - std::log(2.0)) <= 1e-3);
    CHECK(res.kinks[0].derivative_gap > 0.01);
    CHECK(res.rows.size() == 201);
}

TEST_CASE("sweep dual-path agreement at in-regime points") {
    SweepSpec spec;
    spec.variable = SweepVariable::Beta;
    spec.from = 0.45;
    spec.to = 0.62;
    spec.steps = 50;
    spec.theta = 1.0;
    spec.alpha = 0.6;
    SweepResult res = sweep_binary_example(spec);
    int checked = 0;
    for (const auto& r : res.rows) {
        if (!r.in_regime) continue;
        ++checked;
        CHECK(std::abs(r.e_fa_closed - r.e_fa_solver) <= 1e-6);
        CHECK(std::abs(r.e_md_closed - r.e_md_solver) <= 1e-6);
        CHECK(r.e_fa_closed >= 0.0);
        CHECK(r.e_md_closed >= 0.0);
    }
    CHECK(checked >= 40);
}

TEST_CASE("sweep on a flat stretch has no kinks and constant e_fa") {
    // branch 1 dominant while alpha varies below the flip
    SweepSpec spec;
    spec.variable = SweepVariable::Alpha;
    spec.from = 0.0;
    spec.to = 0.05;
    spec.steps = 20;
    spec.theta = 1.0;
    spec.beta = 0.55;  // ln4 - 1.1 = 0.286 > ln2 + alpha - 0.55 for alpha <= 0.05
    SweepResult res = sweep_binary_example(spec);
    CHECK(res.kinks.empty());
    for (const auto& r : res.rows) {
        CHECK(r.branch == 1);
        CHECK(r.e_fa_closed == doctest::Approx(res.rows[0].e_fa_closed).epsilon(1e-12));
    }
}

TEST_CASE("sandwich equivalence of STAR and HAT FA probabilities") {
    RuleSpec hat = hat_example();
    RuleSpec star = hat;
    star.kind = RuleKind::Star;
    RuleContext ctx = known_ctx();
    for (int n : {20, 60, 120, 200}) {
        Region rh = materialize_region(hat, ctx, n, 2);
        Region rs = materialize_region(star, ctx, n, 2);
        double lh = exact_region_prob(rh, kP0);
        double ls = exact_region_prob(rs, kP0);
        double budget = 2.0 * std::log(n + 1.0);  // (number of types)^2, binary
        CHECK(std::abs(lh - ls) <= budget + 1e-9);
    }
}
