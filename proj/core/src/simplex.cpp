#include "chromaprob/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "chromaprob/random_util.hpp"

namespace chromaprob {

bool majorizes(const Distribution& v, const Distribution& w) {
    if (v.size() != w.size()) throw std::invalid_argument("majorization needs equal lengths");
    std::vector<Rational> a = v.p, b = w.p;
    std::sort(a.begin(), a.end(), std::greater<Rational>());
    std::sort(b.begin(), b.end(), std::greater<Rational>());
    Rational pa = 0, pb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
    }
    return pa == pb;
}

Distribution pinch(const Distribution& p, int i, int j, const Rational& t) {
    if (i < 0 || j < 0 || i >= p.size() || j >= p.size() || i == j)
        throw std::invalid_argument("pinch needs two distinct coordinate indices");
    if (t < 0 || t > 1) throw std::invalid_argument("pinch fraction must lie in [0,1]");
    std::vector<Rational> out = p.p;
    Rational mean = (p[i] + p[j]) / 2;
    out[i] = p[i] + t * (mean - p[i]);
    out[j] = p[j] + t * (mean - p[j]);
    return make_distribution(out);
}

namespace {

Distribution composition_distribution(const std::vector<int>& bins, int total) {
    return make_distribution(composition_to_simplex(bins, total));
}

}  // namespace

SchurScanReport schur_concavity_scan(const Graph& g, int q, int samples,
                                     unsigned long long seed, long long max_states) {
    if (q < 2) throw std::invalid_argument("scan needs q >= 2");
    ProfileTable table = build_profile_table(g, q, max_states);
    Rng rng(seed);
    const int denom = 8 * q;
    SchurScanReport report;
    auto check = [&](const Distribution& hi, const Distribution& lo) {
        Rational hi_value = evaluate_profile_table(table, hi);
        Rational lo_value = evaluate_profile_table(table, lo);
        if (hi_value > lo_value) {
            report.holds_on_samples = false;
            report.point = hi;
            report.pinched = lo;
            report.point_value = hi_value;
            report.pinched_value = lo_value;
            return false;
        }
        return true;
    };
    for (int trial = 0; trial < samples; ++trial) {
        Distribution p = [&] {
            if (trial % 3 == 1) {
                // one deliberately heavy coordinate, remainder spread at random
                int heavy = denom / 2 + (int)uniform_below(rng, denom / 2 - q + 2);
                std::vector<int> bins = random_composition(rng, denom - heavy, q - 1);
                bins.insert(bins.begin() + (int)uniform_below(rng, q), heavy);
                return composition_distribution(bins, denom);
            }
            return composition_distribution(random_composition(rng, denom, q), denom);
        }();
        if (trial % 3 == 2) {
            // several pinches in a row walk strictly down the majorization order
            Distribution lower = p;
            int steps = 1 + (int)uniform_below(rng, 3);
            for (int s = 0; s < steps; ++s) {
                int i = (int)uniform_below(rng, q);
                int j = (int)uniform_below(rng, q - 1);
                if (j >= i) ++j;
                lower = pinch(lower, i, j, Rational(1 + (int)uniform_below(rng, 4), 4));
            }
            if (!check(p, lower)) return report;
            continue;
        }
        int i = (int)uniform_below(rng, q);
        int j = (int)uniform_below(rng, q - 1);
        if (j >= i) ++j;
        Rational t(1 + (int)uniform_below(rng, 4), 4);
        if (!check(p, pinch(p, i, j, t))) return report;
        if (!check(p, pinch(p, i, j, Rational(1)))) return report;
    }
    return report;
}

std::vector<double> project_to_simplex(const std::vector<double>& x) {
    const int n = (int)x.size();
    std::vector<double> u = x;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double running = 0.0, tau = 0.0;
    for (int i = 0; i < n; ++i) {
        running += u[i];
        double candidate = (running - 1.0) / (i + 1);
        if (u[i] - candidate > 0) tau = candidate;
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = std::max(x[i] - tau, 0.0);
    return out;
}

MaximizeResult maximize_over_simplex(const Objective& objective, int q, int restarts,
                                     double tolerance) {
    if (q < 1) throw std::invalid_argument("optimizer needs q >= 1");
    if (restarts < 1) throw std::invalid_argument("optimizer needs at least one restart");
    const double h = 1e-6;
    const int max_iters = 400;
    Rng rng(0x5eedULL);
    MaximizeResult best;
    bool have_best = false;
    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<double> p(q, 1.0 / q);
        if (restart > 0) {
            double total = 0.0;
            for (int i = 0; i < q; ++i) {
                double u = (uniform_below(rng, (1ULL << 53) - 1) + 1.0) / (double)(1ULL << 53);
                p[i] = -std::log(u);
                total += p[i];
            }
            for (int i = 0; i < q; ++i) p[i] /= total;
        }
        double value = objective(p);
        bool converged = false;
        for (int iter = 0; iter < max_iters; ++iter) {
            std::vector<double> grad(q);
            for (int i = 0; i < q; ++i) {
                std::vector<double> up = p, down = p;
                up[i] += h;
                down[i] -= h;
                grad[i] = (objective(project_to_simplex(up)) -
                           objective(project_to_simplex(down))) /
                          (2 * h);
            }
            double improved = 0.0;
            std::vector<double> next = p;
            double next_value = value;
            for (double step = 0.5; step > 1e-14; step /= 2) {
                std::vector<double> cand(q);
                for (int i = 0; i < q; ++i) cand[i] = p[i] + step * grad[i];
                cand = project_to_simplex(cand);
                double cand_value = objective(cand);
                if (cand_value > value) {
                    next = cand;
                    next_value = cand_value;
                    improved = cand_value - value;
                    break;
                }
            }
            p = next;
            value = next_value;
            if (improved < tolerance) {
                converged = true;
                break;
            }
        }
        bool better = false;
        if (!have_best) {
            better = true;
        } else if (value > best.value + 1e-12) {
            better = true;
        } else if (std::abs(value - best.value) <= 1e-12 &&
                   std::lexicographical_compare(p.begin(), p.end(), best.argmax.begin(),
                                                best.argmax.end())) {
            better = true;
        }
        if (better) {
            have_best = true;
            best.argmax = p;
            best.value = value;
            best.converged = converged;
        }
    }
    return best;
}

bool step1_condition_holds(const Graph& g, int q, const Distribution& p) {
    if (q != p.size()) throw std::invalid_argument("palette size must match distribution");
    int delta = max_degree(g);
    for (int i = 0; i < p.size(); ++i)
        if (p[i] * p[i] * q >= Rational(4 * delta)) return true;
    return false;
}

Step1Report step1_empirical_check(const Graph& g, int q, int trials,
                                  unsigned long long seed) {
    int delta = max_degree(g);
    if (q <= delta) throw std::invalid_argument("check needs q above the maximum degree");
    PowerSumPolynomial form = power_sum_form(g);
    Rational uniform_value = evaluate_power_sum(form, uniform_distribution(q));
    const int denom = 16 * q;
    Int bound = Int(4) * delta * denom * denom;
    Int scaled = bound / q;
    Int heavy_min = boost::multiprecision::sqrt(scaled);
    while (heavy_min * heavy_min * q < bound) ++heavy_min;
    if (heavy_min > denom)
        throw std::invalid_argument("no grid distribution has a large enough coordinate");
    int lo = (int)heavy_min;
    Rng rng(seed);
    Step1Report report;
    for (int trial = 0; trial < trials; ++trial) {
        int heavy = lo + (int)uniform_below(rng, denom - lo + 1);
        std::vector<int> bins = random_composition(rng, denom - heavy, q - 1);
        bins.insert(bins.begin(), heavy);
        Distribution p = composition_distribution(bins, denom);
        report.trials_run++;
        if (evaluate_power_sum(form, p) > uniform_value) {
            report.holds_on_samples = false;
            report.counterexample_found = true;
            report.counterexample = p;
            return report;
        }
    }
    return report;
}

bool omega_membership(const std::vector<Rational>& z_moduli, int delta, int q, int m_max) {
    if ((int)z_moduli.size() != q) throw std::invalid_argument("modulus vector must have q entries");
    if (m_max < 2) throw std::invalid_argument("moment cutoff must be at least 2");
    if (delta < 0 || q < 1) throw std::invalid_argument("invalid degree or palette size");
    for (const Rational& z : z_moduli)
        if (z < 0) throw std::invalid_argument("moduli must be nonnegative");
    const Rational ratio(4 * delta, q);
    for (int m = 1; m <= m_max; ++m) {
        Rational lhs = 0;
        for (const Rational& z : z_moduli) lhs += rat_pow(z, m);
        int e = m - 1;
        if (e % 2 == 0) {
            if (lhs > rat_pow(ratio, e / 2)) return false;
        } else {
            if (lhs * lhs > rat_pow(ratio, e)) return false;
        }
    }
    return true;
}

bool omega1_membership(const std::vector<Rational>& p, int delta, int q) {
    if ((int)p.size() != q) throw std::invalid_argument("point must have q entries");
    for (const Rational& x : p)
        if (x < 0 || x * x * q > Rational(4 * delta)) return false;
    return true;
}

bool omega1_subset_omega(int delta, int q, int samples, unsigned long long seed, int m_max) {
    if (q < 1) throw std::invalid_argument("palette size must be positive");
    Rng rng(seed);
    const int denom = 8 * q;
    int accepted = 0, attempts = 0;
    std::vector<Rational> uniform(q, Rational(1, q));
    if (omega1_membership(uniform, delta, q) && !omega_membership(uniform, delta, q, m_max))
        return false;
    while (accepted < samples && attempts < 100 * samples + 100) {
        ++attempts;
        std::vector<Rational> p =
            composition_to_simplex(random_composition(rng, denom, q), denom);
        if (!omega1_membership(p, delta, q)) continue;
        ++accepted;
        if (!omega_membership(p, delta, q, m_max)) return false;
    }
    return true;
}

}  // namespace chromaprob
