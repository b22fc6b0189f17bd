// Acceptance gates. One PASS/FAIL line per criterion; exit status 1 if any
// hard criterion fails. Soft targets are reported but never gate.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/core.h>

#include "ratapprox/aaa.hpp"
#include "ratapprox/bounds.hpp"
#include "ratapprox/elliptic.hpp"
#include "ratapprox/error.hpp"
#include "ratapprox/experiments.hpp"
#include "ratapprox/iterative.hpp"
#include "ratapprox/loewner.hpp"
#include "ratapprox/maxerror.hpp"
#include "ratapprox/newman.hpp"
#include "ratapprox/sampling.hpp"
#include "support.hpp"

using namespace ratapprox;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void gate(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  fmt::print("[{}] {:2d} {} ({:.1f} s{}) {}\n", pass ? "PASS" : "FAIL", id, name, secs,
             in_time ? "" : fmt::format(", limit {:.0f} s", limit_s), o.detail);
  std::fflush(stdout);
}

void soft(const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  fmt::print("[SOFT-{}] {} ({:.1f} s) {}\n", o.ok ? "PASS" : "MISS", name, secs, o.detail);
  std::fflush(stdout);
}

TargetFunction as_target(const testing::PoleResidue& f) {
  return {f, [f](double x) {
            double s = 0;
            for (std::size_t i = 0; i < f.poles.size(); ++i)
              s -= f.residues[i] / ((x - f.poles[i]) * (x - f.poles[i]));
            return s;
          }};
}

bool within_factor(double value, double ref, double factor) {
  return std::isfinite(value) && value > 0 && value <= factor * ref && value >= ref / factor;
}

std::vector<double> symmetric_grid(std::size_t points) {
  std::vector<double> xs(points);
  for (std::size_t i = 0; i < points; ++i)
    xs[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
  return xs;
}

// ---- criteria -------------------------------------------------------------

Outcome sylvester_suite() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> kdist(4, 64);
  const PartitionScheme schemes[] = {PartitionScheme::Split, PartitionScheme::Alternating, PartitionScheme::Same};
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const int k = kdist(rng);
    const auto scheme = schemes[t % 3];
    // alternate between |x| data and a random rational target
    PartitionedData pd;
    if (t % 2 == 0) {
      const auto pos = testing::random_points(k, 1e-3, 1.0, rng);
      std::vector<double> xs;
      for (double x : pos) {
        xs.push_back(x);
        xs.push_back(-x * (0.9 + 0.05 * (t % 3)));
      }
      pd = add_origin(partition(sample_abs(xs), scheme));
    } else {
      const auto f = testing::random_rational(1 + t % 8, rng);
      const auto target = as_target(f);
      pd = partition(sample_function(testing::random_points(2 * k, -1.0, 1.0, rng), target), scheme, target);
    }
    const auto p = loewner::build_pencil(pd);
    const auto s = loewner::sylvester_residuals(p);
    worst = std::max({worst, s.first, s.second});
  }
  return {worst <= 1e-12, fmt::format("max relative residual {:.3e} (tol 1e-12)", worst)};
}

// Real function with complex-conjugate pole pairs near [-1, 1] (plus one real
// pole for odd q). Poles close to the data keep the numerical rank at q.
struct ConjugatePoles {
  std::vector<std::complex<double>> poles, residues;

  double operator()(double x) const {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < poles.size(); ++i) s += residues[i] / (x - poles[i]);
    return s.real();
  }
  double derivative(double x) const {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < poles.size(); ++i) s -= residues[i] / ((x - poles[i]) * (x - poles[i]));
    return s.real();
  }
};

ConjugatePoles random_conjugate(int q, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), height(0.05, 0.3), mag(0.5, 2.0);
  ConjugatePoles f;
  const int pairs = q / 2;
  for (int k = 0; k < pairs; ++k) {
    const double re = -0.9 + 1.8 * (k + 0.5) / pairs + 0.05 * u(rng);
    f.poles.push_back({re, height(rng)});
    f.residues.push_back(2.0 * std::complex<double>(mag(rng), u(rng)));  // c/(x-p) + conj = 2 Re
  }
  if (q % 2) {
    f.poles.push_back({u(rng) < 0 ? -1.3 : 1.3, 0.0});
    f.residues.push_back({mag(rng), 0.0});
  }
  return f;
}

Outcome exact_recovery() {
  std::mt19937_64 rng(202);
  double worst = 0, worst_pointwise = 0;
  int rank_misses = 0, cases = 0;
  for (int q = 1; q <= 10; ++q) {
    for (auto scheme : {PartitionScheme::Split, PartitionScheme::Alternating, PartitionScheme::Same}) {
      const auto f = random_conjugate(q, rng);
      const TargetFunction target{f, [f](double x) { return f.derivative(x); }};
      // 2k = 4q points, half on each side so every partition has both roles filled
      auto xs = testing::random_points(2 * q, 0.01, 1.0, rng);
      const auto neg = testing::random_points(2 * q, -1.0, -0.01, rng);
      xs.insert(xs.end(), neg.begin(), neg.end());
      const auto ds = sample_function(xs, target);
      const auto p = loewner::build_pencil(partition(ds, scheme, target));
      const auto t = loewner::svd_truncate(p, loewner::RelativeTolerance{1e-10});
      ++cases;
      if (t.r != q) {
        ++rank_misses;
        continue;
      }
      const auto m = loewner::realize(p, t);
      double scale = 0, gap = 0;
      for (const auto& s : ds.pairs) {
        scale = std::max(scale, std::abs(s.f));
        const double d = std::abs(evaluate(m, s.tau) - s.f);
        gap = std::max(gap, d);
        worst_pointwise = std::max(worst_pointwise, d / std::abs(s.f));
      }
      worst = std::max(worst, gap / scale);
    }
  }
  return {rank_misses == 0 && worst <= 1e-9,
          fmt::format("{} cases, rank mismatches {}, max sample error relative to max|f| {:.3e} (tol 1e-9), "
                      "pointwise {:.3e}",
                      cases, rank_misses, worst, worst_pointwise)};
}

Outcome table_counts() {
  const auto t = experiments::reproduce_table(2);
  int bad = 0;
  std::string cells;
  for (const auto& c : t.cells) {
    const bool ok = std::abs(c.computed - c.published) <= 3;
    bad += !ok;
    cells += fmt::format(" {}/{}={:.0f}[{:.0f}]{}", c.row, c.column, c.computed, c.published, ok ? "" : "!");
  }
  return {bad == 0, fmt::format("{} of {} cells outside +-3:{}", bad, t.cells.size(), cells)};
}

Outcome table_errors() {
  const auto t = experiments::reproduce_table(3);
  int bad = 0;
  std::string cells;
  for (const auto& c : t.cells) {
    const bool ok = c.valid && within_factor(c.computed, c.published, 2.0);
    bad += !ok;
    cells += fmt::format(" {}/{}={:.4e}[{:.4e}]{}{}", c.row, c.column, c.computed, c.published,
                         c.valid ? "" : "(pole)", ok ? "" : "!");
  }
  return {bad == 0, fmt::format("{} of {} cells outside factor 2:{}", bad, t.cells.size(), cells)};
}

Outcome origin_effect() {
  experiments::ExperimentConfig cfg;
  cfg.points = PointFamily::Linspace;
  const auto ds = experiments::make_dataset(cfg);
  const auto without = experiments::fit_loewner(ds, PartitionScheme::Same, false, loewner::FixedRank{28});
  const auto with = experiments::fit_loewner(ds, PartitionScheme::Same, true, loewner::FixedRank{28});
  const double e0 = without.report.eps_total, e1 = with.report.eps_total;
  const bool ok = without.report.valid && with.report.valid && within_factor(e0, 2.7575e-4, 2.0) &&
                  within_factor(e1, 7.9058e-5, 2.0) && e1 < e0;
  return {ok, fmt::format("without origin {:.4e} [2.7575e-04], with origin {:.4e} [7.9058e-05]", e0, e1)};
}

Outcome newman_bound() {
  const auto xs = symmetric_grid(1000001);
  std::string detail;
  bool ok = true;
  for (int n : {9, 16, 25, 36, 49}) {
    const auto na = newman::make_newman(n);
    double worst = 0;
    for (double x : xs) worst = std::max(worst, std::abs(newman::newman_eval(na, x) - std::abs(x)));
    const double bound = 3.0 * std::exp(-std::sqrt(static_cast<double>(n)));
    ok = ok && worst <= bound;
    detail += fmt::format(" n={}: {:.4e} <= {:.4e}", n, worst, bound);
  }
  return {ok, detail};
}

Outcome stahl_constants() {
  struct Ref {
    int n;
    double value;
  };
  bool ok = true;
  std::string detail;
  for (const auto& [n, ref] : {Ref{48, 2.8211e-09}, Ref{76, 1.0203e-11}, Ref{210, 1.3533e-19}}) {
    const double v = bounds::bound_value(bounds::BoundKind::StahlEstimate, n);
    const bool same = fmt::format("{:.4e}", v) == fmt::format("{:.4e}", ref);
    ok = ok && same;
    detail += fmt::format(" n={}: {:.4e} [{:.4e}]", n, v, ref);
  }
  return {ok, detail};
}

Outcome maxerror_oracle() {
  std::mt19937_64 rng(303);
  std::vector<RationalApproximant> models;
  for (int i = 0; i < 10; ++i) models.push_back(testing::random_stable_model(2 + i, rng));
  experiments::ExperimentConfig cfg;
  cfg.n = 96;
  const auto ds = experiments::make_dataset(cfg);
  for (int r = 6; r <= 24; r += 2)
    models.push_back(experiments::fit_loewner(ds, PartitionScheme::Same, true, loewner::FixedRank{r}).model);
  double worst = 0;
  int invalid = 0, below_grid = 0;
  for (const auto& m : models) {
    const auto rep = maxerror::max_error(m);
    if (!rep.valid) {
      ++invalid;
      continue;
    }
    const auto g = maxerror::grid_max_error(m, 1000001);
    worst = std::max(worst, std::abs(rep.eps_total - g.value) / g.value);
    below_grid += rep.eps_total < g.value * (1 - 1e-12);
  }
  return {invalid == 0 && worst <= 1e-3,
          fmt::format("{} models, invalid {}, max relative gap to 1e6 grid {:.3e} (tol 1e-3), eigen below grid {}",
                      models.size(), invalid, worst, below_grid)};
}

Outcome iterative_run() {
  experiments::ExperimentConfig cfg;
  cfg.points = PointFamily::Chebyshev;
  cfg.n = 1024;
  const auto ds = experiments::make_dataset(cfg);
  iterative::IterateOptions opt;  // r = 48, xi = 1e-7, 22 steps, Same
  const auto res = iterative::loewner_iterate(ds, opt);
  const auto& steps = res.trace.steps;
  const double e0 = steps.empty() ? NAN : steps.front().eps_total;
  const double last = steps.empty() ? NAN : steps.back().eps_total;
  const bool ok = res.trace.converged && last < 1e-7 && steps.size() <= 22 && within_factor(e0, 1.1240e-4, 3.0);
  return {ok, fmt::format("steps {}, step-0 error {:.4e} [1.1240e-04], final {:.4e} (xi 1e-7)", steps.size(), e0,
                          last)};
}

Outcome aaa_properties() {
  struct Case {
    std::function<double(double)> f;
    int points;
    int order;
  };
  const std::vector<Case> cases{
      {[](double x) { return std::abs(x); }, 501, 10},
      {[](double x) { return std::abs(x); }, 1001, 20},
      {[](double x) { return std::exp(x); }, 300, 8},
      {[](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, 400, 12},
      {[](double x) { return std::tanh(8.0 * x); }, 600, 16},
      {[](double x) { return std::sqrt(1.01 - x); }, 500, 14},
      {[](double x) { return std::abs(x) * std::exp(x); }, 700, 18},
      {[](double x) { return std::sin(6.0 * x); }, 350, 10},
      {[](double x) { return std::log(2.0 + x); }, 450, 9},
      {[](double x) { return std::abs(x - 0.3); }, 800, 22},
  };
  int interp_bad = 0, greedy_bad = 0, greedy_exact = 0, greedy_total = 0;
  double worst_real = 0;
  for (const auto& c : cases) {
    MeasurementSet ds;
    for (int i = 0; i < c.points; ++i) {
      const double x = -1.0 + 2.0 * i / (c.points - 1);
      ds.pairs.push_back({x, c.f(x)});
    }
    const auto res = aaa::aaa_fit(ds, aaa::StopAtOrder{c.order});
    const auto& b = res.form;
    for (std::size_t k = 0; k < b.support.size(); ++k) interp_bad += aaa::bary_eval(b, b.support[k]) != b.values[k];

    // brute-force greedy replay
    double mean = 0;
    for (const auto& s : ds.pairs) mean += s.f;
    mean /= static_cast<double>(ds.size());
    double fmax = 0;
    for (const auto& sp : ds.pairs) fmax = std::max(fmax, std::abs(sp.f));
    std::vector<char> used(ds.size(), 0);
    for (std::size_t it = 0; it < res.trace.iterations.size(); ++it) {
      std::vector<double> resid(ds.size(), -1.0);
      std::size_t best = 0;
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (used[i]) continue;
        double r = mean;
        if (it > 0) {
          const auto& prev = res.trace.iterations[it - 1].form;
          double num = 0, den = 0;
          for (std::size_t k = 0; k < prev.support.size(); ++k) {
            num += prev.weights[k] * prev.values[k] / (ds.pairs[i].tau - prev.support[k]);
            den += prev.weights[k] / (ds.pairs[i].tau - prev.support[k]);
          }
          r = num / den;
        }
        resid[i] = std::abs(ds.pairs[i].f - r);
        if (resid[i] > resid[best] || used[best]) best = i;
      }
      // the choice must attain the maximum up to rounding in the residual itself
      const std::size_t chosen = res.trace.iterations[it].index;
      const double slack = 1e-12 * resid[best] + 64 * std::numeric_limits<double>::epsilon() * fmax;
      greedy_bad += used[chosen] || resid[chosen] < resid[best] - slack;
      greedy_exact += chosen == best;
      ++greedy_total;
      used[chosen] = 1;
    }

    // realization against the barycentric quotient away from poles
    const PreparedModel pm(aaa::aaa_realization(b));
    for (int i = 0; i < 1000; ++i) {
      const double x = -1.0 + 2.0 * (i + 0.5) / 1000.0;
      double den = 0;
      bool at_support = false;
      for (std::size_t k = 0; k < b.support.size(); ++k) {
        at_support = at_support || x == b.support[k];
        den += b.weights[k] / (x - b.support[k]);
      }
      if (at_support || std::abs(den) <= 1e-8) continue;
      const double ref = aaa::bary_eval(b, x);
      worst_real = std::max(worst_real, std::abs(pm(x) - ref) / std::max(std::abs(ref), 1e-300));
    }
  }
  return {interp_bad == 0 && greedy_bad == 0 && worst_real <= 1e-9,
          fmt::format("{} fits, interpolation misses {}, greedy choices below the scanned maximum {} "
                      "(same index {}/{}), realization gap {:.3e} (tol 1e-9)",
                      cases.size(), interp_bad, greedy_bad, greedy_exact, greedy_total, worst_real)};
}

Outcome elliptic_kernel() {
  double worst_k = 0;
  for (double k : {0.1, 0.5, 0.9, 0.99}) {
    auto f = [k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); };
    const double quad =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi / 2, 15, 1e-15);
    worst_k = std::max(worst_k, std::abs(complete_elliptic_Kprime(k) - quad) / quad);
  }
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> ud(-10.0, 10.0), kd(0.0, 0.999999);
  double worst_id = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = jacobi_sn_cn(ud(rng), kd(rng));
    worst_id = std::max(worst_id, std::abs(s.sn * s.sn + s.cn * s.cn - 1.0));
  }
  return {worst_k <= 1e-10 && worst_id <= 1e-12,
          fmt::format("K relative gap {:.3e} (tol 1e-10), |sn^2+cn^2-1| {:.3e} (tol 1e-12)", worst_k, worst_id)};
}

// ---- soft targets ---------------------------------------------------------

Outcome table5_soft() {
  const auto t = experiments::reproduce_table(5);
  int bad = 0;
  std::string cells;
  for (const auto& c : t.cells) {
    const bool ok = c.valid && within_factor(c.computed, c.published, 5.0);
    bad += !ok;
    cells += fmt::format(" {}/{}={:.4e}[{:.4e}]{}", c.row, c.column, c.computed, c.published, ok ? "" : "!");
  }
  return {bad == 0, fmt::format("{} of {} cells outside factor 5:{}", bad, t.cells.size(), cells)};
}

Outcome newman2048_soft() {
  const auto ds = sample_abs(symmetric_extend(newman_points(1024)));
  const auto fit =
      experiments::fit_loewner(ds, PartitionScheme::Alternating, true, loewner::RelativeTolerance{1e-14});
  const double e = fit.report.eps_total;
  return {fit.report.valid && within_factor(e, 4.2942e-11, 5.0),
          fmt::format("alternating, delta 1e-14: r = {} [210], error {:.4e} [4.2942e-11]{}", fit.r, e,
                      fit.report.valid ? "" : " (pole in [-1, 1])")};
}

}  // namespace

int main() {
  gate(1, "Sylvester identities on 50 random datasets", 10, sylvester_suite);
  gate(2, "exact recovery of rational functions up to order 10", 30, exact_recovery);
  gate(3, "singular-value counts, 12 cells within +-3", 600, table_counts);
  gate(4, "maximum errors at r = 28, 16 cells within factor 2", 900, table_errors);
  gate(5, "origin insertion improves linspace/same", 0, origin_effect);
  gate(6, "closed-form approximant below 3 exp(-sqrt n)", 60, newman_bound);
  gate(7, "asymptotic-law constants to 4 digits", 0, stahl_constants);
  gate(8, "eigenvalue max error against a 1e6-point grid", 120, maxerror_oracle);
  gate(9, "greedy refinement reaches 1e-7 within 22 steps", 1200, iterative_run);
  gate(10, "AAA interpolation, greedy choice and realization", 120, aaa_properties);
  gate(11, "elliptic integral and sn/cn identity", 10, elliptic_kernel);
  soft("deep truncation on Newman points, factor 5", table5_soft);
  soft("2048 Newman points at r near 210, factor 5", newman2048_soft);
  fmt::print("{} hard criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
