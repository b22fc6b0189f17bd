#include "ratapprox/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "ratapprox/bounds.hpp"
#include "ratapprox/error.hpp"
#include "ratapprox/experiments.hpp"
#include "ratapprox/io.hpp"
#include "ratapprox/iterative.hpp"

namespace ratapprox::cli {
namespace {

namespace fs = std::filesystem;
using experiments::ExperimentConfig;

// Raw flag values; a flag only overrides the config when it was given.
struct Flags {
  std::string config;
  std::string points, partition, method;
  double a = 0, b = 0, delta = 0, xi = 0;
  int n = 0, order = 0, max_steps = 0, order_min = 0, order_max = 0, grid_points = 0;
  bool add_zero = false;
  std::string out;
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }
};

void add_config_flags(CLI::App* sub, Flags& f, bool fit_flags) {
  f.opts["config"] = sub->add_option("--config", f.config, "JSON config file (flags override its fields)");
  f.opts["points"] = sub->add_option("--points", f.points, "linspace|logspace|chebyshev|zolotarev|newman");
  f.opts["a"] = sub->add_option("--a", f.a, "left end of the positive half-interval");
  f.opts["b"] = sub->add_option("--b", f.b, "right end of the positive half-interval");
  f.opts["n"] = sub->add_option("--n", f.n, "points per half-interval");
  f.opts["out"] = sub->add_option("--out", f.out, "output path");
  if (!fit_flags) return;
  f.opts["partition"] = sub->add_option("--partition", f.partition, "split|alternating|same");
  f.opts["method"] = sub->add_option("--method", f.method, "loewner|aaa|newman");
  f.opts["order"] = sub->add_option("--order", f.order, "approximant order r");
  f.opts["delta"] = sub->add_option("--delta", f.delta, "relative SVD tolerance (Loewner; replaces --order)");
  f.opts["add_zero"] = sub->add_flag("--add-zero", f.add_zero, "add the pair (0, 0)");
  f.opts["xi"] = sub->add_option("--xi", f.xi, "target maximum error (iterate)");
  f.opts["max_steps"] = sub->add_option("--max-steps", f.max_steps, "step budget (iterate)");
  f.opts["order_min"] = sub->add_option("--order-min", f.order_min, "first order of a sweep");
  f.opts["order_max"] = sub->add_option("--order-max", f.order_max, "last order of a sweep");
  f.opts["grid_points"] = sub->add_option("--grid-points", f.grid_points, "error-curve grid size");
}

ExperimentConfig resolve(const Flags& f) {
  ExperimentConfig cfg;
  if (f.given("config")) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot read config file " + f.config);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = experiments::config_from_json(ss.str(), cfg);
  }
  if (f.given("points")) cfg.points = parse_point_family(f.points);
  if (f.given("partition")) cfg.partition = parse_partition_scheme(f.partition);
  if (f.given("method")) cfg.method = experiments::parse_method(f.method);
  if (f.given("a")) cfg.a = f.a;
  if (f.given("b")) cfg.b = f.b;
  if (f.given("n")) cfg.n = f.n;
  if (f.given("order")) cfg.order = f.order;
  if (f.given("delta")) cfg.delta = f.delta;
  if (f.given("add_zero")) cfg.add_zero = f.add_zero;
  if (f.given("xi")) cfg.xi = f.xi;
  if (f.given("max_steps")) cfg.max_steps = f.max_steps;
  if (f.given("order_min")) cfg.order_min = f.order_min;
  if (f.given("order_max")) cfg.order_max = f.order_max;
  if (f.given("grid_points")) cfg.grid_points = f.grid_points;
  if (f.given("out")) cfg.out = f.out;
  return cfg;
}

std::ofstream open_file(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error("cannot write " + p.string());
  return os;
}

// Writes to the file when a path is given, else to `out`.
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  auto os = open_file(path);
  write(os);
  if (!os) throw Error("write failed: " + path);
}

void cmd_gen_points(const ExperimentConfig& cfg, bool symmetric, std::ostream& out) {
  auto pts = generate_points(cfg.points, {cfg.a, cfg.b, cfg.n});
  if (symmetric) pts = symmetric_extend(pts);
  emit(cfg.out, out, [&](std::ostream& os) {
    io::CsvWriter csv(os, {"x"});
    for (double x : pts) csv.row(std::vector<double>{x});
  });
}

void cmd_fit(const ExperimentConfig& cfg, std::ostream& out) {
  const auto fit = experiments::run_fit(cfg);
  if (!cfg.out.empty()) {
    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    {
      auto os = open_file(dir / "model.json");
      io::write_model_json(os, fit.model);
    }
    {
      auto os = open_file(dir / "report.json");
      io::write_report_json(os, fit.report);
    }
    if (fit.barycentric) {
      auto os = open_file(dir / "barycentric.json");
      io::write_barycentric_json(os, *fit.barycentric);
    }
    {
      auto os = open_file(dir / "error_curve.csv");
      const auto xs = maxerror::uniform_grid(static_cast<std::size_t>(std::max(cfg.grid_points, 2)));
      std::vector<double> vals(xs.size());
      PreparedModel(fit.model).evaluate_many(xs, vals);
      io::CsvWriter csv(os, {"x", "abs_error"});
      for (std::size_t i = 0; i < xs.size(); ++i) csv.row({xs[i], std::abs(vals[i] - std::abs(xs[i]))});
    }
    auto os = open_file(dir / "config.json");
    os << experiments::config_to_json(cfg);
  }
  io::JsonWriter w(out);
  w.begin_object();
  w.key("method").value(to_string(cfg.method));
  w.key("order").value(fit.r);
  io::write_report_fields(w, fit.report);
  w.end_object();
}

void cmd_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  const auto rows = experiments::run_sweep(cfg);
  emit(cfg.out, out, [&](std::ostream& os) {
    io::CsvWriter csv(os, {"order", "method", "eps_total", "valid", "NewmanUpper", "BulanovLower",
                           "StahlEstimate"});
    for (const auto& r : rows)
      csv.row(std::vector<std::string>{std::to_string(r.order), r.method, io::format_double(r.eps_total),
                                       r.valid ? "1" : "0", io::format_double(r.newman_upper),
                                       io::format_double(r.bulanov_lower), io::format_double(r.stahl_estimate)});
  });
}

void cmd_reproduce_table(int id, const std::string& path, std::ostream& out) {
  const auto t = experiments::reproduce_table(id);
  out << fmt::format("Table {}: {}\n", t.id, t.title);
  out << fmt::format("{:<11} {:<12} {:>14} {:>14} {:>10}\n", "row", "column", "computed", "published",
                     t.counts ? "diff" : "ratio");
  for (const auto& c : t.cells) {
    const std::string rel = t.counts ? fmt::format("{:+.0f}", c.computed - c.published)
                                     : fmt::format("{:.3f}", c.computed / c.published);
    const std::string comp = t.counts ? fmt::format("{:.0f}", c.computed) : fmt::format("{:.4e}", c.computed);
    const std::string pub = t.counts ? fmt::format("{:.0f}", c.published) : fmt::format("{:.4e}", c.published);
    out << fmt::format("{:<11} {:<12} {:>14} {:>14} {:>10}{}\n", c.row, c.column, comp, pub, rel,
                       c.valid ? "" : "  (pole in [-1,1])");
  }
  if (path.empty()) return;
  auto os = open_file(path);
  io::CsvWriter csv(os, {"table", "row", "column", "computed", "published", "ratio", "valid"});
  for (const auto& c : t.cells)
    csv.row(std::vector<std::string>{std::to_string(t.id), c.row, c.column, io::format_double(c.computed),
                                     io::format_double(c.published), io::format_double(c.computed / c.published),
                                     c.valid ? "1" : "0"});
}

void cmd_iterate(const ExperimentConfig& cfg, std::ostream& out) {
  iterative::IterateOptions opt;
  opt.r = cfg.order;
  opt.xi = cfg.xi;
  opt.max_steps = cfg.max_steps;
  opt.scheme = cfg.partition;
  const auto res = iterative::loewner_iterate(experiments::make_dataset(cfg), opt);
  if (!cfg.out.empty()) {
    const fs::path dir(cfg.out);
    fs::create_directories(dir);
    {
      auto os = open_file(dir / "trace.csv");
      iterative::write_trace_csv(os, res.trace);
    }
    auto os = open_file(dir / "model.json");
    io::write_model_json(os, res.model);
  } else {
    iterative::write_trace_csv(out, res.trace);
  }
  for (const auto& w : res.trace.warnings) out << "warning: " << w << '\n';
  out << fmt::format("steps: {}  final eps_total: {}  converged: {}\n", res.trace.steps.size(),
                     io::format_double(res.trace.steps.back().eps_total), res.trace.converged ? "yes" : "no");
}

void cmd_bounds(int lo, int hi, const std::string& path, std::ostream& out) {
  if (lo < 0 || hi < lo) throw ConfigError("bounds: need 0 <= order-min <= order-max");
  using bounds::BoundKind;
  const BoundKind kinds[] = {BoundKind::NewmanUpper, BoundKind::NewmanLower, BoundKind::BulanovLower,
                             BoundKind::StahlEstimate};
  emit(path, out, [&](std::ostream& os) {
    io::CsvWriter csv(os, {"n", "NewmanUpper", "NewmanLower", "BulanovLower", "StahlEstimate"});
    for (int n = lo; n <= hi; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (auto k : kinds)
        row.push_back(n >= bounds::min_valid_n(k) ? io::format_double(bounds::bound_value(k, n)) : "nan");
      csv.row(row);
    }
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational approximation of |x|: Loewner, AAA and Newman fits with exact maximum errors"};
  app.require_subcommand(1);

  Flags gen_f, fit_f, sweep_f, table_f, iter_f, bounds_f;
  bool symmetric = false;
  int table_id = 0;
  int bounds_n = -1, bounds_lo = 1, bounds_hi = 40;

  auto* gen = app.add_subcommand("gen-points", "write sample points as CSV");
  add_config_flags(gen, gen_f, false);
  gen->add_flag("--symmetric", symmetric, "emit the symmetric extension -p U p");

  auto* fit = app.add_subcommand("fit", "fit one approximant; writes model, report and error curve");
  add_config_flags(fit, fit_f, true);
  auto* sweep = app.add_subcommand("sweep", "maximum error over a range of orders for every method");
  add_config_flags(sweep, sweep_f, true);
  auto* table = app.add_subcommand("reproduce-table", "recompute a published table (2, 3, 4 or 5)");
  table->add_option("--table", table_id, "table number")->required()->check(CLI::IsMember({2, 3, 4, 5}));
  table_f.opts["out"] = table->add_option("--out", table_f.out, "CSV output path");
  auto* iter = app.add_subcommand("iterate", "greedy Loewner refinement at fixed order");
  add_config_flags(iter, iter_f, true);
  auto* bnd = app.add_subcommand("bounds", "classical bounds and the Stahl estimate");
  bnd->add_option("--n", bounds_n, "single n");
  bnd->add_option("--order-min", bounds_lo, "first n");
  bnd->add_option("--order-max", bounds_hi, "last n");
  bnd->add_option("--out", bounds_f.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) {
      auto cfg = resolve(gen_f);
      cmd_gen_points(cfg, symmetric, out);
    } else if (*fit) {
      cmd_fit(resolve(fit_f), out);
    } else if (*sweep) {
      cmd_sweep(resolve(sweep_f), out);
    } else if (*table) {
      cmd_reproduce_table(table_id, table_f.out, out);
    } else if (*iter) {
      auto cfg = resolve(iter_f);
      if (!iter_f.given("order") && !iter_f.given("config")) cfg.order = 48;
      cmd_iterate(cfg, out);
    } else if (*bnd) {
      if (bounds_n >= 0) bounds_lo = bounds_hi = bounds_n;
      cmd_bounds(bounds_lo, bounds_hi, bounds_f.out, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ratapprox::cli
