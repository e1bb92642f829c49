#include "jointdc/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jointdc {

namespace {

constexpr double kMomentTol = 1e-10;
constexpr double kBracketCap = 1152921504606846976.0;  // 2^60

// Q(x) ~ p(x) exp(w(x)) in log domain; symbols with p(x) = 0 stay at 0.
Pmf tilt_weights(const Pmf& p, const std::vector<double>& w) {
    const std::size_t k = p.alphabet_size();
    std::vector<double> logw(k, -kInf);
    double m = -kInf;
    for (std::size_t x = 0; x < k; ++x) {
        if (p(x) == 0.0) continue;
        logw[x] = p.log_prob(x) + w[x];
        m = std::max(m, logw[x]);
    }
    if (m == -kInf)
        throw std::invalid_argument("tilt_weights: empty support");
    std::vector<double> q(k, 0.0);
    double z = 0.0;
    for (std::size_t x = 0; x < k; ++x) {
        if (logw[x] == -kInf) continue;
        q[x] = std::exp(logw[x] - m);
        z += q[x];
    }
    for (double& v : q) v /= z;
    return Pmf(std::move(q));
}

double moment(const Pmf& q, const std::vector<double>& c) {
    double v = 0.0;
    for (std::size_t x = 0; x < q.alphabet_size(); ++x) {
        if (q(x) == 0.0) continue;
        if (c[x] == kInf) return kInf;
        if (c[x] == -kInf) return -kInf;
        v += q(x) * c[x];
    }
    return v;
}

double covariance(const Pmf& q, const std::vector<double>& a,
                  const std::vector<double>& b) {
    double ma = moment(q, a), mb = moment(q, b);
    double v = 0.0;
    for (std::size_t x = 0; x < q.alphabet_size(); ++x)
        if (q(x) > 0.0) v += q(x) * (a[x] - ma) * (b[x] - mb);
    return v;
}

// min over the support of p; +inf coefficients force q = 0 on the symbol, so
// they do not enter the minimum.
double min_coeff_on_support(const Pmf& p, const std::vector<double>& c) {
    double m = kInf;
    for (std::size_t x = 0; x < p.alphabet_size(); ++x)
        if (p(x) > 0.0) m = std::min(m, c[x]);
    return m;
}

// Point-mass limit of the tilted family: p conditioned on the argmin set of c.
Pmf vertex_pmf(const Pmf& p, const std::vector<double>& c) {
    double cmin = min_coeff_on_support(p, c);
    std::vector<double> q(p.alphabet_size(), 0.0);
    double z = 0.0;
    for (std::size_t x = 0; x < p.alphabet_size(); ++x)
        if (p(x) > 0.0 && c[x] <= cmin) {
            q[x] = p(x);
            z += q[x];
        }
    for (double& v : q) v /= z;
    return Pmf(std::move(q));
}

Pmf tilt_single(const Pmf& p, const std::vector<double>& c, double s) {
    std::vector<double> w(p.alphabet_size(), 0.0);
    for (std::size_t x = 0; x < p.alphabet_size(); ++x) {
        if (p(x) == 0.0) continue;
        if (c[x] == kInf)
            w[x] = s > 0.0 ? -kInf : 0.0;
        else
            w[x] = -s * c[x];
    }
    return tilt_weights(p, w);
}

ExponentResult infeasible_result(const Pmf& p, std::size_t n_constraints) {
    ExponentResult r(p);
    r.value = kInf;
    r.feasible = false;
    r.multipliers.assign(n_constraints, 0.0);
    r.active.assign(n_constraints, false);
    return r;
}

// Feasibility of {E_q c1 <= b1, E_q c2 <= b2} over the simplex restricted to
// the support of p: minimize E_q c2 subject to E_q c1 <= b1; the LP optimum
// sits at a unit vector or on an edge where the first constraint is tight.
bool jointly_feasible(const Pmf& p, const LinearConstraint& c1,
                      const LinearConstraint& c2) {
    const std::size_t k = p.alphabet_size();
    double best = kInf;
    for (std::size_t i = 0; i < k; ++i) {
        if (p(i) == 0.0) continue;
        if (c1.coeffs[i] <= c1.bound) best = std::min(best, c2.coeffs[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            if (p(j) == 0.0) continue;
            double ci = c1.coeffs[i], cj = c1.coeffs[j];
            if (!std::isfinite(ci) || !std::isfinite(cj) || ci == cj) continue;
            double t = (c1.bound - cj) / (ci - cj);
            if (t < 0.0 || t > 1.0) continue;
            best = std::min(best, t * c2.coeffs[i] + (1.0 - t) * c2.coeffs[j]);
        }
    }
    return best <= c2.bound;
}

}  // namespace

ExponentResult min_kl_linear(const Pmf& p, const LinearConstraint& c) {
    if (c.coeffs.size() != p.alphabet_size())
        throw std::invalid_argument("min_kl_linear: coefficient size mismatch");

    ExponentResult r(p);
    r.multipliers = {0.0};
    r.active = {false};

    double mp = moment(p, c.coeffs);
    if (mp <= c.bound) {
        r.value = 0.0;
        return r;  // p itself is feasible
    }

    double cmin = min_coeff_on_support(p, c.coeffs);
    if (c.bound < cmin) return infeasible_result(p, 1);

    // Bracket s >= 0 with moment(Q_s) decreasing from mp toward cmin.
    double lo = 0.0, hi = 1.0;
    while (moment(tilt_single(p, c.coeffs, hi), c.coeffs) > c.bound) {
        hi *= 2.0;
        if (hi > kBracketCap) {
            // Boundary optimum at a vertex (point mass on the argmin set).
            Pmf q = vertex_pmf(p, c.coeffs);
            r.q_opt = q;
            r.value = kl_divergence(q, p);
            r.multipliers = {kBracketCap};
            r.active = {true};
            return r;
        }
    }
    for (int it = 0; it < 400; ++it) {
        double mid = 0.5 * (lo + hi);
        Pmf q = tilt_single(p, c.coeffs, mid);
        double m = moment(q, c.coeffs);
        if (std::abs(m - c.bound) <= kMomentTol) {
            r.q_opt = q;
            r.value = kl_divergence(q, p);
            r.multipliers = {mid};
            r.active = {true};
            return r;
        }
        (m > c.bound ? lo : hi) = mid;
        if (hi - lo < 1e-15 * std::max(1.0, hi)) break;
    }
    Pmf q = tilt_single(p, c.coeffs, 0.5 * (lo + hi));
    r.q_opt = q;
    r.value = kl_divergence(q, p);
    r.multipliers = {0.5 * (lo + hi)};
    r.active = {true};
    return r;
}

ExponentResult min_kl_two_linear(const Pmf& p, const LinearConstraint& c1,
                                 const LinearConstraint& c2) {
    constexpr double kSlack = 1e-9;
    bool have = false;
    ExponentResult best(p);

    auto consider = [&](ExponentResult cand) {
        if (!have || cand.value < best.value) {
            best = std::move(cand);
            have = true;
        }
    };

    double m1p = moment(p, c1.coeffs), m2p = moment(p, c2.coeffs);
    if (m1p <= c1.bound + kSlack && m2p <= c2.bound + kSlack) {
        ExponentResult r(p);
        r.value = 0.0;
        r.multipliers = {0.0, 0.0};
        r.active = {false, false};
        return r;
    }

    // Single-active candidates.
    for (int which = 0; which < 2; ++which) {
        const LinearConstraint& ca = which == 0 ? c1 : c2;
        const LinearConstraint& cb = which == 0 ? c2 : c1;
        ExponentResult ra = min_kl_linear(p, ca);
        if (!ra.feasible) continue;
        if (moment(ra.q_opt, cb.coeffs) <= cb.bound + kSlack) {
            ExponentResult r(ra.q_opt);
            r.value = ra.value;
            r.multipliers = which == 0
                                ? std::vector<double>{ra.multipliers[0], 0.0}
                                : std::vector<double>{0.0, ra.multipliers[0]};
            r.active = which == 0 ? std::vector<bool>{ra.active[0], false}
                                  : std::vector<bool>{false, ra.active[0]};
            consider(std::move(r));
        }
    }

    // Both constraints active: damped Newton in the multipliers (s1, s2) of
    // Q ~ p exp(-s1 c1 - s2 c2).
    {
        double s1 = 1.0, s2 = 1.0;
        auto make_q = [&](double a, double b) {
            std::vector<double> w(p.alphabet_size(), 0.0);
            for (std::size_t x = 0; x < p.alphabet_size(); ++x) {
                if (p(x) == 0.0) continue;
                double w1 = c1.coeffs[x] == kInf ? (a > 0.0 ? kInf : 0.0)
                                                 : a * c1.coeffs[x];
                double w2 = c2.coeffs[x] == kInf ? (b > 0.0 ? kInf : 0.0)
                                                 : b * c2.coeffs[x];
                w[x] = -(w1 + w2);
            }
            return tilt_weights(p, w);
        };
        auto resid = [&](const Pmf& q, double& f1, double& f2) {
            f1 = moment(q, c1.coeffs) - c1.bound;
            f2 = moment(q, c2.coeffs) - c2.bound;
            return std::hypot(f1, f2);
        };
        bool converged = false;
        Pmf q = make_q(s1, s2);
        double f1, f2;
        double rn = resid(q, f1, f2);
        for (int it = 0; it < 200 && !converged; ++it) {
            if (rn <= 1e-8 * std::max(1.0, std::abs(c1.bound) + std::abs(c2.bound))) {
                converged = true;
                break;
            }
            double a11 = covariance(q, c1.coeffs, c1.coeffs);
            double a12 = covariance(q, c1.coeffs, c2.coeffs);
            double a22 = covariance(q, c2.coeffs, c2.coeffs);
            double det = a11 * a22 - a12 * a12;
            if (!(std::abs(det) > 1e-300)) break;
            // J = -Cov, so Newton step solves Cov * d = F.
            double d1 = (a22 * f1 - a12 * f2) / det;
            double d2 = (a11 * f2 - a12 * f1) / det;
            double step = 1.0;
            bool improved = false;
            for (int h = 0; h < 60; ++h) {
                double t1 = s1 + step * d1, t2 = s2 + step * d2;
                Pmf qn = make_q(t1, t2);
                double g1, g2;
                double rnew = resid(qn, g1, g2);
                if (rnew < rn) {
                    s1 = t1;
                    s2 = t2;
                    q = qn;
                    f1 = g1;
                    f2 = g2;
                    rn = rnew;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if ((converged ||
             rn <= 1e-8 * std::max(1.0, std::abs(c1.bound) + std::abs(c2.bound))) &&
            s1 >= -1e-12 && s2 >= -1e-12) {
            ExponentResult r(q);
            r.value = kl_divergence(q, p);
            r.multipliers = {std::max(s1, 0.0), std::max(s2, 0.0)};
            r.active = {true, true};
            consider(std::move(r));
        }
    }

    if (!have) {
        if (!jointly_feasible(p, c1, c2)) return infeasible_result(p, 2);
        // Feasible but every smooth candidate failed: fall back to the
        // vertex of the harder constraint.
        ExponentResult r = infeasible_result(p, 2);
        return r;
    }
    return best;
}

namespace {

std::vector<double> log_probs(const Pmf& p) {
    std::vector<double> v(p.alphabet_size());
    for (std::size_t x = 0; x < p.alphabet_size(); ++x) v[x] = p.log_prob(x);
    return v;
}

std::vector<double> log_ratio(const Pmf& num, const Pmf& den) {
    std::vector<double> v(num.alphabet_size());
    for (std::size_t x = 0; x < num.alphabet_size(); ++x) {
        if (num(x) == 0.0 && den(x) == 0.0)
            v[x] = 0.0;
        else
            v[x] = num.log_prob(x) - den.log_prob(x);
    }
    return v;
}

void require_full_support_p1(const Pmf& p1, const char* who) {
    if (!p1.full_support())
        throw std::invalid_argument(std::string(who) +
                                    ": p1 must have full support");
}

}  // namespace

ExponentResult exponent_e_md(const Pmf& p0, const Pmf& p1, double theta,
                             double alpha, double beta) {
    require_full_support_p1(p1, "exponent_e_md");
    LinearConstraint c1{log_probs(p1), -beta * (1.0 + 1.0 / theta)};
    LinearConstraint c2{log_ratio(p1, p0), alpha - beta};
    ExponentResult e1 = min_kl_linear(p1, c1);
    ExponentResult e2 = min_kl_linear(p1, c2);
    bool first = e1.value <= e2.value;
    ExponentResult r(first ? e1.q_opt : e2.q_opt);
    r.value = std::min(e1.value, e2.value);
    r.feasible = first ? e1.feasible : e2.feasible;
    r.multipliers = {e1.multipliers[0], e2.multipliers[0]};
    r.active = {first, !first};
    return r;
}

ExponentResult exponent_e_fa(const Pmf& p0, const Pmf& p1, double theta,
                             double alpha, double beta) {
    require_full_support_p1(p1, "exponent_e_fa");
    std::vector<double> neg_log_p1 = log_probs(p1);
    for (double& v : neg_log_p1) v = -v;
    LinearConstraint c1{std::move(neg_log_p1), beta * (1.0 + 1.0 / theta)};
    LinearConstraint c2{log_ratio(p0, p1), beta - alpha};
    return min_kl_two_linear(p0, c1, c2);
}

ExponentResult exponent_e_c(const Pmf& p0, const Pmf& p1, double theta,
                            double alpha, double beta) {
    require_full_support_p1(p1, "exponent_e_c");
    if (!(theta > 0.0))
        throw std::invalid_argument("exponent_e_c: theta must be positive");
    const std::size_t k = p1.alphabet_size();
    const std::vector<double> lp1 = log_probs(p1);
    const std::vector<double> lr = log_ratio(p1, p0);
    const double t1 = -beta * (1.0 + 1.0 / theta);  // E ln p1 >= t1
    const double t2 = alpha - beta;                 // E ln(p1/p0) >= t2
    const double one_plus_theta = 1.0 + theta;

    // Objective theta H(Q) - D(Q||P1) = (1+theta) H(Q) + E_Q ln P1.
    auto objective = [&](const Pmf& q) {
        return one_plus_theta * entropy(q) + moment(q, lp1);
    };
    // Stationary family: q ~ exp{ [ln p1 + mu ln p1 + rho ln(p1/p0)] / (1+theta) }.
    auto family = [&](double mu, double rho) {
        std::vector<double> logw(k);
        for (std::size_t x = 0; x < k; ++x) {
            double num = lp1[x] + mu * lp1[x] +
                         (rho == 0.0 ? 0.0 : rho * lr[x]);
            logw[x] = num / one_plus_theta;
        }
        double m = *std::max_element(logw.begin(), logw.end());
        if (m == kInf)
            throw std::domain_error("exponent_e_c: unbounded tilt (p0 zero mass)");
        std::vector<double> q(k);
        double z = 0.0;
        for (std::size_t x = 0; x < k; ++x) {
            q[x] = std::exp(logw[x] - m);
            z += q[x];
        }
        for (double& v : q) v /= z;
        return Pmf(std::move(q));
    };

    constexpr double kSlack = 1e-9;
    bool have = false;
    ExponentResult best(p1);
    auto consider = [&](Pmf q, std::vector<double> mult, std::vector<bool> act) {
        double m1 = moment(q, lp1), m2 = moment(q, lr);
        if (m1 < t1 - kSlack || m2 < t2 - kSlack) return;
        double val = objective(q);
        if (!have || val > best.value) {
            best = ExponentResult(std::move(q));
            best.value = val;
            best.multipliers = std::move(mult);
            best.active = std::move(act);
            have = true;
        }
    };

    consider(family(0.0, 0.0), {0.0, 0.0}, {false, false});

    // Single-active candidates by bisection on the (monotone) moment.
    auto solve_single = [&](bool first) -> void {
        double target = first ? t1 : t2;
        const std::vector<double>& c = first ? lp1 : lr;
        auto mom = [&](double s) {
            return moment(first ? family(s, 0.0) : family(0.0, s), c);
        };
        if (mom(0.0) >= target) return;  // constraint already slack at mu=0
        double lo = 0.0, hi = 1.0;
        while (mom(hi) < target) {
            hi *= 2.0;
            if (hi > kBracketCap) return;
        }
        for (int it = 0; it < 400; ++it) {
            double mid = 0.5 * (lo + hi);
            if (mom(mid) < target) lo = mid; else hi = mid;
            if (hi - lo < 1e-14 * std::max(1.0, hi)) break;
        }
        double s = 0.5 * (lo + hi);
        Pmf q = first ? family(s, 0.0) : family(0.0, s);
        if (first)
            consider(std::move(q), {s, 0.0}, {true, false});
        else
            consider(std::move(q), {0.0, s}, {false, true});
    };
    solve_single(true);
    solve_single(false);

    // Both active: damped Newton on (mu, rho).
    {
        double mu = 1.0, rho = 1.0;
        Pmf q = family(mu, rho);
        auto resid = [&](const Pmf& qq, double& f1, double& f2) {
            f1 = moment(qq, lp1) - t1;
            f2 = moment(qq, lr) - t2;
            return std::hypot(f1, f2);
        };
        double f1, f2;
        double rn = resid(q, f1, f2);
        bool ok = false;
        for (int it = 0; it < 200; ++it) {
            if (rn <= 1e-8) {
                ok = true;
                break;
            }
            double a11 = covariance(q, lp1, lp1) / one_plus_theta;
            double a12 = covariance(q, lp1, lr) / one_plus_theta;
            double a22 = covariance(q, lr, lr) / one_plus_theta;
            double det = a11 * a22 - a12 * a12;
            if (!(std::abs(det) > 1e-300)) break;
            double d1 = -(a22 * f1 - a12 * f2) / det;
            double d2 = -(a11 * f2 - a12 * f1) / det;
            double step = 1.0;
            bool improved = false;
            for (int h = 0; h < 60; ++h) {
                Pmf qn = family(mu + step * d1, rho + step * d2);
                double g1, g2;
                double rnew = resid(qn, g1, g2);
                if (rnew < rn) {
                    mu += step * d1;
                    rho += step * d2;
                    q = qn;
                    f1 = g1;
                    f2 = g2;
                    rn = rnew;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if ((ok || rn <= 1e-8) && mu >= -1e-12 && rho >= -1e-12)
            consider(q, {std::max(mu, 0.0), std::max(rho, 0.0)}, {true, true});
    }

    if (!have) {
        ExponentResult r = infeasible_result(p1, 2);
        r.value = -kInf;
        return r;
    }
    return best;
}

namespace {

double e1_value(const Pmf& p1, double theta, double beta) {
    LinearConstraint c{log_probs(p1), -beta * (1.0 + 1.0 / theta)};
    return min_kl_linear(p1, c).value;
}

double e2_value(const Pmf& p0, const Pmf& p1, double gap) {
    LinearConstraint c{log_ratio(p1, p0), gap};
    return min_kl_linear(p1, c).value;
}

double efa_value(const Pmf& p0, const Pmf& p1, double theta, double beta,
                 double fixed_gap) {
    std::vector<double> c1c = log_probs(p1);
    for (double& v : c1c) v = -v;
    LinearConstraint c1{std::move(c1c), beta * (1.0 + 1.0 / theta)};
    LinearConstraint c2{log_ratio(p0, p1), -fixed_gap};
    return min_kl_two_linear(p0, c1, c2).value;
}

[[noreturn]] void range_error(const char* which, double target, double lo,
                              double hi) {
    throw std::domain_error(std::string("invert_exponent(") + which +
                            "): target " + std::to_string(target) +
                            " outside attainable range [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
}

// Bisection on a monotone function to 1e-9 in the argument.
template <typename F>
double bisect_monotone(F f, double lo, double hi, double target,
                       bool increasing) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = f(mid);
        bool go_right = increasing ? (v < target) : (v > target);
        (go_right ? lo : hi) = mid;
        if (hi - lo <= 1e-9) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double invert_exponent(ExponentBranch which, double target, const Pmf& p0,
                       const Pmf& p1, double theta, double fixed_gap) {
    require_full_support_p1(p1, "invert_exponent");
    if (target < 0.0)
        throw std::domain_error("invert_exponent: target must be >= 0");
    const double h1 = entropy(p1);
    double min_lp1 = kInf, max_lp1 = -kInf;
    for (std::size_t x = 0; x < p1.alphabet_size(); ++x) {
        min_lp1 = std::min(min_lp1, p1.log_prob(x));
        max_lp1 = std::max(max_lp1, p1.log_prob(x));
    }

    switch (which) {
        case ExponentBranch::E1: {
            // e1 increases in beta on (theta H1/(1+theta), -theta ln min p1/(1+theta)].
            double blo = theta * h1 / (1.0 + theta);
            double bhi = -theta * min_lp1 / (1.0 + theta);
            if (target == 0.0) return blo;
            double emax = e1_value(p1, theta, bhi);
            if (target > emax + 1e-12) range_error("E1", target, 0.0, emax);
            return bisect_monotone(
                [&](double b) { return e1_value(p1, theta, b); }, blo, bhi,
                target, true);
        }
        case ExponentBranch::E2: {
            // e2 decreases in the gap on [min ln(p1/p0), D(p1||p0)).
            std::vector<double> lr = log_ratio(p1, p0);
            double glo = min_coeff_on_support(p1, lr);
            double ghi = kl_divergence(p1, p0);
            if (target == 0.0) return ghi;
            double emax = e2_value(p0, p1, glo);
            if (target > emax + 1e-12) range_error("E2", target, 0.0, emax);
            return bisect_monotone(
                [&](double g) { return e2_value(p0, p1, g); }, glo, ghi, target,
                false);
        }
        case ExponentBranch::EFA: {
            // e_fa decreases in beta; the code-length constraint is active for
            // beta between the two edges below and slack beyond the upper one.
            double blo = -theta * max_lp1 / (1.0 + theta);
            double bhi = -theta * min_lp1 / (1.0 + theta);
            double efloor = efa_value(p0, p1, theta, bhi, fixed_gap);
            double etop = efa_value(p0, p1, theta, blo, fixed_gap);
            if (target > etop + 1e-12) range_error("EFA", target, 0.0, etop);
            // At or below the floor the code-length constraint is slack for
            // every Q, so any beta >= bhi satisfies the FA target; bhi is the
            // largest value the e1 range admits.
            if (target <= efloor) return bhi;
            return bisect_monotone(
                [&](double b) { return efa_value(p0, p1, theta, b, fixed_gap); },
                blo, bhi, target, false);
        }
    }
    throw std::logic_error("invert_exponent: unreachable");
}

PlannedParameters plan_parameters(double exp_fa, double exp_md, double theta,
                                  const Pmf& p0, const Pmf& p1) {
    if (!(exp_fa > 0.0) || !(exp_md > 0.0))
        throw std::domain_error("plan_parameters: targets must be positive");
    PlannedParameters plan;
    bool in_range = true;
    try {
        plan.e2_inv = invert_exponent(ExponentBranch::E2, exp_md, p0, p1, theta);
        plan.e1_inv = invert_exponent(ExponentBranch::E1, exp_md, p0, p1, theta);
        plan.e_fa_inv = invert_exponent(ExponentBranch::EFA, exp_fa, p0, p1,
                                        theta, plan.e2_inv);
    } catch (const std::domain_error&) {
        in_range = false;  // a target exceeds its attainable range
    }
    if (!in_range) {
        plan.feasible = false;
        plan.margin = -kInf;
        return plan;
    }
    plan.margin = plan.e_fa_inv - plan.e1_inv;
    plan.feasible = plan.margin >= -1e-12;
    plan.beta = plan.e_fa_inv;
    plan.alpha = plan.e_fa_inv + plan.e2_inv;
    return plan;
}

double simplex_grid_oracle(const Pmf& p,
                           const std::vector<LinearConstraint>& constraints,
                           OracleObjective objective, int resolution,
                           double theta) {
    const std::size_t k = p.alphabet_size();
    if (k != 2 && k != 3)
        throw std::invalid_argument("simplex_grid_oracle: alphabet size must be 2 or 3");
    if (resolution < 1 || (k == 2 && resolution > 5000) ||
        (k == 3 && resolution > 400))
        throw std::invalid_argument("simplex_grid_oracle: resolution out of range");

    const bool maximize = objective == OracleObjective::EcMax;
    double best = maximize ? -kInf : kInf;

    auto eval = [&](const std::vector<double>& q) {
        for (const auto& c : constraints) {
            double m = 0.0;
            for (std::size_t x = 0; x < k; ++x) {
                if (q[x] == 0.0) continue;
                if (c.coeffs[x] == kInf) return;
                m += q[x] * c.coeffs[x];
            }
            if (m > c.bound) return;
        }
        double h = 0.0, d = 0.0;
        for (std::size_t x = 0; x < k; ++x) {
            if (q[x] == 0.0) continue;
            h -= q[x] * std::log(q[x]);
            if (p(x) == 0.0) {
                d = kInf;
                break;
            }
            d += q[x] * std::log(q[x] / p(x));
        }
        double v = maximize ? theta * h - d : d;
        if (maximize ? v > best : v < best) best = v;
    };

    std::vector<double> q(k, 0.0);
    const double r = resolution;
    if (k == 2) {
        for (int i = 0; i <= resolution; ++i) {
            q[0] = i / r;
            q[1] = (resolution - i) / r;
            eval(q);
        }
    } else {
        for (int i = 0; i <= resolution; ++i)
            for (int j = 0; j + i <= resolution; ++j) {
                q[0] = i / r;
                q[1] = j / r;
                q[2] = (resolution - i - j) / r;
                eval(q);
            }
    }
    return best;
}

}  // namespace jointdc
