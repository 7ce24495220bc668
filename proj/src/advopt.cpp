#include "qcat/advopt.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qcat/entmetrics.hpp"
#include "qcat/tolerances.hpp"

namespace qcat {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double entropy_of(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) s += plogp(x);
    return s;
}

double objective(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) s += std::sqrt(std::max(x, 0.0));
    return s * s;
}

// Entropy of the uniform-tail family (x, (1-x)/(d-1), ...), decreasing in x
// on [1/d, 1].
double tail_entropy(double x, std::size_t d) {
    const double rest = (1.0 - x) / static_cast<double>(d - 1);
    return plogp(x) + static_cast<double>(d - 1) * plogp(rest);
}

// Largest x with tail_entropy(x) <= s0 (the entropy-matched spike).
double solve_tail(double s0, std::size_t d) {
    double lo = 1.0 / static_cast<double>(d), hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (tail_entropy(mid, d) > s0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Maximize phi (concave along the segment) on [lo, hi] by golden section.
template <typename F>
double golden_max(F&& phi, double lo, double hi, double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = phi(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = phi(x1);
        }
    }
    return 0.5 * (a + b);
}

// One pass of pairwise-transfer ascent with the entropy constraint active as
// a feasibility filter; S is concave along each transfer line, so the
// feasible set on a line is at most two end intervals.
bool ascent_pass(std::vector<double>& p, double s0, double& best) {
    const std::size_t d = p.size();
    bool improved = false;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            // move t from p[j] to p[i]: candidate(t) feasible iff S <= s0
            const double tmax = p[j];
            const double tmin = -p[i];
            if (tmax - tmin < 1e-14) continue;
            auto value = [&](double t) {
                std::vector<double> q = p;
                q[i] += t;
                q[j] -= t;
                return objective(q);
            };
            auto feasible = [&](double t) {
                std::vector<double> q = p;
                q[i] += t;
                q[j] -= t;
                return entropy_of(q) <= s0 + 1e-13;
            };
            // scan for feasible subsegments at both ends (entropy concave in t)
            const int grid = 24;
            double prev_t = tmin;
            bool prev_ok = feasible(tmin);
            std::vector<std::pair<double, double>> segs;
            double seg_start = prev_ok ? tmin : 0.0;
            for (int k = 1; k <= grid; ++k) {
                double t = tmin + (tmax - tmin) * static_cast<double>(k) / grid;
                bool ok = feasible(t);
                if (ok != prev_ok) {
                    // bisect the boundary
                    double a = prev_t, b = t;
                    for (int it = 0; it < 60; ++it) {
                        double mid = 0.5 * (a + b);
                        if (feasible(mid) == prev_ok)
                            a = mid;
                        else
                            b = mid;
                    }
                    if (prev_ok)
                        segs.emplace_back(seg_start, a);
                    else
                        seg_start = b;
                }
                prev_ok = ok;
                prev_t = t;
            }
            if (prev_ok) segs.emplace_back(seg_start, tmax);
            for (auto [lo, hi] : segs) {
                if (hi - lo < 1e-15) continue;
                double t = golden_max(value, lo, hi, 1e-12);
                if (!feasible(t)) continue;
                double v = value(t);
                if (v > best + 1e-14) {
                    p[i] += t;
                    p[j] -= t;
                    best = v;
                    improved = true;
                }
            }
        }
    }
    return improved;
}

} // namespace

double solve_binary_entropy_eq() {
    auto f = [](double x) { return plogp(x) + plogp(1.0 - x) - x * std::log(2.0); };
    double lo = 0.5 + 1e-15, hi = 1.0 - 1e-15;
    // f > 0 just above 1/2, f < 0 near 1
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Lemma1Result lemma1_bound(const SchmidtSpectrum& lam, std::size_t d) {
    if (d < 2) throw std::invalid_argument("lemma1_bound: d must be >= 2");
    if (lam.size() > d) throw std::invalid_argument("lemma1_bound: spectrum longer than d");
    std::vector<double> base(d, 0.0);
    for (std::size_t i = 0; i < lam.size(); ++i) base[i] = std::max(lam.lambdas[i], 0.0);
    const double s0 = entropy_of(base);

    // zero entropy forces lam' pure
    if (s0 <= 1e-12) {
        std::vector<double> pure(d, 0.0);
        pure[0] = 1.0;
        return {1.0 / static_cast<double>(d), SchmidtSpectrum(std::move(pure))};
    }
    // uniform feasible: f = 1
    if (s0 >= std::log(static_cast<double>(d)) - 1e-12) {
        std::vector<double> unif(d, 1.0 / static_cast<double>(d));
        return {1.0, SchmidtSpectrum(std::move(unif))};
    }

    std::vector<double> best_p = base;
    double best = objective(base);

    // entropy-matched uniform-tail candidate
    {
        double x = solve_tail(s0, d);
        std::vector<double> q(d, (1.0 - x) / static_cast<double>(d - 1));
        q[0] = x;
        if (entropy_of(q) <= s0 + 1e-12 && objective(q) > best) {
            best = objective(q);
            best_p = q;
        }
    }
    // coarse ordered-simplex grid (d = 3 is the acceptance surface; higher d
    // still gets the ansatz + ascent)
    if (d == 3) {
        const int n = 60;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= std::min(i, n - i); ++j) {
                int k = n - i - j;
                if (k > j) continue;
                std::vector<double> q{static_cast<double>(i) / n, static_cast<double>(j) / n,
                                      static_cast<double>(k) / n};
                if (entropy_of(q) > s0 + 1e-13) continue;
                double v = objective(q);
                if (v > best) {
                    best = v;
                    best_p = q;
                }
            }
    }

    for (int pass = 0; pass < 200; ++pass)
        if (!ascent_pass(best_p, s0, best)) break;

    std::sort(best_p.begin(), best_p.end(), std::greater<double>());
    double sum = 0.0;
    for (double x : best_p) sum += x;
    for (auto& x : best_p) x /= sum;
    return {objective(best_p) / static_cast<double>(d), SchmidtSpectrum(std::move(best_p))};
}

std::vector<AdvantagePoint> advantage_map(double resolution, std::size_t d_r) {
    if (!(resolution > 0.0) || resolution > 0.5)
        throw std::invalid_argument("advantage_map: resolution must be in (0, 0.5]");
    const int n = static_cast<int>(std::lround(1.0 / resolution));
    std::vector<std::array<int, 3>> grid;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= std::min(i, n - i); ++j) {
            int k = n - i - j;
            if (k > j) continue;
            grid.push_back({i, j, k});
        }
    std::vector<AdvantagePoint> out(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(grid.size()); ++g) {
        const auto& ijk = grid[static_cast<std::size_t>(g)];
        std::vector<double> lam{static_cast<double>(ijk[0]) / n, static_cast<double>(ijk[1]) / n,
                                static_cast<double>(ijk[2]) / n};
        SchmidtSpectrum spec(lam);
        AdvantagePoint p;
        p.lam = {lam[0], lam[1], lam[2]};
        p.f_std = pure_ent_fraction(spec, 3);
        auto l1 = lemma1_bound(spec, 3);
        p.f_cat_lb = std::max(l1.f_cat_lb, p.f_std); // lam' = lam always feasible
        p.F_std = tele_fidelity(p.f_std, d_r);
        p.F_cat_lb = tele_fidelity(p.f_cat_lb, d_r);
        p.eta = (p.F_cat_lb - p.F_std) / p.F_std;
        out[static_cast<std::size_t>(g)] = p;
    }
    return out;
}

void write_advantage_csv(std::ostream& os, const std::vector<AdvantagePoint>& points) {
    os << "lambda1,lambda2,lambda3,f_std,f_cat_lb,F_std,F_cat_lb,eta\n";
    os.precision(12);
    for (const auto& p : points) {
        os << p.lam[0] << ',' << p.lam[1] << ',' << p.lam[2] << ',' << p.f_std << ',' << p.f_cat_lb
           << ',' << p.F_std << ',' << p.F_cat_lb << ',' << p.eta << '\n';
    }
}

} // namespace qcat
