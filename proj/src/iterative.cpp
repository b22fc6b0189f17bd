#include "ratapprox/iterative.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "ratapprox/error.hpp"
#include "ratapprox/io.hpp"
#include "ratapprox/loewner.hpp"

namespace ratapprox::iterative {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kShift = 1e-12;
constexpr int kStagnationSteps = 5;

RationalApproximant fit(const PartitionedData& pd, int r) {
  const auto pencil = loewner::build_pencil(pd);
  const auto t = loewner::svd_truncate(pencil, loewner::FixedRank{r});
  return loewner::realize(pencil, t);
}

// Adds (x, |x|) and returns the abscissa actually used.
double add_point(PartitionedData& pd, double x, IterationTrace& trace, int step) {
  double y = x;
  while (pd.contains_abscissa(y)) {
    const double moved = y + (y > 0 ? -kShift : kShift);
    trace.warnings.push_back(
        fmt::format("step {}: abscissa {:.17g} already present, moved to {:.17g}", step, y, moved));
    y = moved;
  }
  const Sample s{y, std::abs(y)};
  if (pd.scheme == PartitionScheme::Same && y != 0.0) {
    pd.right.push_back(s);
    pd.left.push_back(s);
    pd.hermite->push_back(abs_target().slopes(y));
  } else {
    pd.extra.push_back(s);
  }
  return y;
}

}  // namespace

IterationResult loewner_iterate(const MeasurementSet& ds, const IterateOptions& opt) {
  if (opt.r <= 0) throw ArgumentError("loewner_iterate: r must be positive");
  if (!(opt.xi > 0.0)) throw ArgumentError("loewner_iterate: xi must be positive");
  if (opt.max_steps < 1) throw ArgumentError("loewner_iterate: max_steps must be positive");
  for (const auto& s : ds.pairs)
    if (s.tau == 0.0 || std::abs(s.tau) == 1.0)
      throw DataError("loewner_iterate: data must not contain 0 or +-1");

  IterationResult res;
  res.data = partition(ds, opt.scheme);
  auto& trace = res.trace;
  int rising = 0;

  for (int step = 0; step < opt.max_steps; ++step) {
    double x1 = kNaN, x2 = kNaN;
    if (step == 1) {
      const auto& prev = trace.steps.back().report;
      // global interior argmax; ties go to the positive side
      const double rho = prev.eps_minus > prev.eps_plus ? prev.argmax_minus : prev.argmax_plus;
      x1 = add_point(res.data, 0.0, trace, step);
      x2 = add_point(res.data, rho, trace, step);
    } else if (step == 2) {
      x1 = add_point(res.data, -1.0, trace, step);
      x2 = add_point(res.data, 1.0, trace, step);
    } else if (step > 2) {
      const auto& prev = trace.steps.back().report;
      x1 = add_point(res.data, prev.argmax_minus, trace, step);
      x2 = add_point(res.data, prev.argmax_plus, trace, step);
    }

    res.model = fit(res.data, opt.r);
    StepRecord rec;
    rec.step = step;
    rec.report = maxerror::max_error(res.model);
    rec.eps_total = rec.report.eps_total;
    rec.eps_at_0 = rec.report.eps_at_0;
    rec.eps_minus = rec.report.eps_minus;
    rec.eps_plus = rec.report.eps_plus;
    rec.added_x1 = x1;
    rec.added_x2 = x2;
    rec.data_size = res.data.right.size() + res.data.extra.size() +
                    (opt.scheme == PartitionScheme::Same ? 0 : res.data.left.size());
    if (!rec.report.valid)
      trace.warnings.push_back(fmt::format("step {}: model has a real pole in [-1, 1]", step));

    if (!trace.steps.empty()) {
      rising = rec.eps_total >= trace.steps.back().eps_total ? rising + 1 : 0;
      if (rising == kStagnationSteps)
        trace.warnings.push_back(
            fmt::format("step {}: error has not decreased for {} consecutive steps", step, rising));
    }
    trace.steps.push_back(std::move(rec));

    if (step >= 2 && trace.steps.back().eps_total < opt.xi) {
      trace.converged = true;
      break;
    }
  }
  return res;
}

void write_trace_csv(std::ostream& out, const IterationTrace& trace) {
  io::CsvWriter csv(out, {"step", "eps_total", "eps_at_0", "eps_minus", "eps_plus", "added_x1", "added_x2"});
  for (const auto& s : trace.steps)
    csv.row({static_cast<double>(s.step), s.eps_total, s.eps_at_0, s.eps_minus, s.eps_plus, s.added_x1,
             s.added_x2});
}

}  // namespace ratapprox::iterative
