#include "ratapprox/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <fmt/core.h>

#include "json.hpp"
#include "ratapprox/bounds.hpp"
#include "ratapprox/error.hpp"
#include "ratapprox/io.hpp"
#include "ratapprox/newman.hpp"

namespace ratapprox::experiments {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMachineEps = 2.2204e-16;

// the tabulated experiments: |x| on [-1, -2^-10] U [2^-10, 1], 1024 points per side
constexpr double kTableA = 0x1p-10;
constexpr int kTableN = 1024;
constexpr int kTableOrder = 28;
constexpr int kNewmanTableN = 128;

const std::vector<std::string> kFamilies{"linspace", "chebyshev", "logspace", "zolotarev"};
const std::vector<std::string> kSchemes{"split", "alternating", "same"};
const std::vector<std::string> kDeltas{"1e-09", "1e-11", "1e-13", "1e-15"};

void append_origin(MeasurementSet& ds) {
  for (const auto& s : ds.pairs)
    if (s.tau == 0.0) return;
  ds.pairs.push_back({0.0, 0.0});
}

MeasurementSet table_dataset(PointFamily family) {
  ExperimentConfig cfg;
  cfg.points = family;
  cfg.a = kTableA;
  cfg.b = 1.0;
  cfg.n = family == PointFamily::Newman ? kNewmanTableN : kTableN;
  return make_dataset(cfg);
}

// Loewner pencil and its SVD, computed once per (family, scheme) for a table.
struct PencilSvd {
  loewner::LoewnerPencil pencil;
  linalg::Svd svd;
};

class TableRunner {
 public:
  const PencilSvd& pencil(PointFamily family, PartitionScheme scheme) {
    const auto key = std::make_pair(family, scheme);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto pd = add_origin(partition(table_dataset(family), scheme));
    auto entry = std::make_unique<PencilSvd>();
    entry->pencil = loewner::build_pencil(pd);
    entry->svd = linalg::svd(entry->pencil.L);
    return *cache_.emplace(key, std::move(entry)).first->second;
  }

  TableCell cell(int id, const std::string& row, const std::string& column) {
    TableCell c{row, column, kNaN, published_value(id, row, column)};
    if (id == 2 || id == 3) {
      const auto family = parse_point_family(row);
      if (column == "aaa") {
        const auto fit = fit_aaa(table_dataset(family), true, kTableOrder);
        c.computed = fit.report.eps_total;
        c.valid = fit.report.valid;
        return c;
      }
      const auto& ps = pencil(family, parse_partition_scheme(column));
      if (id == 2) {
        c.computed = static_cast<double>(loewner::count_significant_svals(ps.svd.S, kMachineEps));
        return c;
      }
      const auto t = loewner::svd_truncate(ps.svd, loewner::FixedRank{kTableOrder});
      const auto report = maxerror::max_error(loewner::realize(ps.pencil, t));
      c.computed = report.eps_total;
      c.valid = report.valid;
      return c;
    }
    if (id == 4 || id == 5) {
      const double delta = std::stod(row);
      if (column == "aaa") {
        // AAA runs at the order retained by the Same scheme
        const auto& same = pencil(PointFamily::Newman, PartitionScheme::Same);
        const int r = static_cast<int>(loewner::count_significant_svals(same.svd.S, delta));
        const auto fit = fit_aaa(table_dataset(PointFamily::Newman), true, r);
        c.computed = fit.report.eps_total;
        c.valid = fit.report.valid;
        return c;
      }
      const auto& ps = pencil(PointFamily::Newman, parse_partition_scheme(column));
      const auto t = loewner::svd_truncate(ps.svd, loewner::RelativeTolerance{delta});
      if (id == 4) {
        c.computed = static_cast<double>(t.r);
        return c;
      }
      const auto report = maxerror::max_error(loewner::realize(ps.pencil, t));
      c.computed = report.eps_total;
      c.valid = report.valid;
      return c;
    }
    throw ArgumentError(fmt::format("unknown table {}", id));
  }

  static double published_value(int id, const std::string& row, const std::string& column) {
    for (const auto& c : published_table(id))
      if (c.row == row && c.column == column) return c.published;
    throw ArgumentError(fmt::format("table {} has no cell ({}, {})", id, row, column));
  }

 private:
  std::map<std::pair<PointFamily, PartitionScheme>, std::unique_ptr<PencilSvd>> cache_;
};

std::vector<TableCell> grid(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                            const std::vector<double>& values) {
  std::vector<TableCell> out;
  std::size_t k = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) out.push_back({r, c, kNaN, values[k++]});
  return out;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Loewner: return "loewner";
    case Method::Aaa: return "aaa";
    case Method::Newman: return "newman";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "loewner") return Method::Loewner;
  if (name == "aaa") return Method::Aaa;
  if (name == "newman") return Method::Newman;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string config_to_json(const ExperimentConfig& cfg) {
  std::ostringstream os;
  io::JsonWriter w(os);
  w.begin_object();
  w.key("points").value(to_string(cfg.points));
  w.key("partition").value(to_string(cfg.partition));
  w.key("a").value(cfg.a);
  w.key("b").value(cfg.b);
  w.key("n").value(cfg.n);
  w.key("add_zero").value(cfg.add_zero);
  w.key("method").value(to_string(cfg.method));
  w.key("order").value(cfg.order);
  if (cfg.delta) w.key("delta").value(*cfg.delta);
  w.key("xi").value(cfg.xi);
  w.key("max_steps").value(cfg.max_steps);
  w.key("order_min").value(cfg.order_min);
  w.key("order_max").value(cfg.order_max);
  w.key("grid_points").value(cfg.grid_points);
  w.key("out").value(cfg.out);
  w.end_object();
  return os.str();
}

ExperimentConfig config_from_json(std::string_view text, ExperimentConfig cfg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "points") cfg.points = parse_point_family(v.get<std::string>());
      else if (k == "partition") cfg.partition = parse_partition_scheme(v.get<std::string>());
      else if (k == "a") cfg.a = v.get<double>();
      else if (k == "b") cfg.b = v.get<double>();
      else if (k == "n") cfg.n = v.get<int>();
      else if (k == "add_zero") cfg.add_zero = v.get<bool>();
      else if (k == "method") cfg.method = parse_method(v.get<std::string>());
      else if (k == "order") cfg.order = v.get<int>();
      else if (k == "delta") cfg.delta = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
      else if (k == "xi") cfg.xi = v.get<double>();
      else if (k == "max_steps") cfg.max_steps = v.get<int>();
      else if (k == "order_min") cfg.order_min = v.get<int>();
      else if (k == "order_max") cfg.order_max = v.get<int>();
      else if (k == "grid_points") cfg.grid_points = v.get<int>();
      else if (k == "out") cfg.out = v.get<std::string>();
      else throw ConfigError("config: unknown key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

MeasurementSet make_dataset(const ExperimentConfig& cfg) {
  const auto pts = generate_points(cfg.points, {cfg.a, cfg.b, cfg.n});
  return sample_abs(symmetric_extend(pts));
}

FitOutcome fit_loewner(const MeasurementSet& ds, PartitionScheme scheme, bool add_zero,
                       const loewner::TruncationMode& mode) {
  auto pd = partition(ds, scheme);
  if (add_zero && !pd.contains_abscissa(0.0)) pd = add_origin(std::move(pd));
  const auto pencil = loewner::build_pencil(pd);
  const auto t = loewner::svd_truncate(pencil, mode);
  FitOutcome out;
  out.model = loewner::realize(pencil, t);
  out.report = maxerror::max_error(out.model);
  out.singular_values = t.singular_values;
  out.r = static_cast<int>(t.r);
  return out;
}

FitOutcome fit_aaa(const MeasurementSet& ds, bool add_zero, int r) {
  MeasurementSet data = ds;
  if (add_zero) append_origin(data);
  auto fit = aaa::aaa_fit(data, aaa::StopAtOrder{r});
  FitOutcome out;
  out.model = aaa::aaa_realization(fit.form);
  out.report = maxerror::max_error(out.model);
  out.r = fit.form.order();
  out.barycentric = std::move(fit.form);
  return out;
}

FitOutcome fit_newman(int n) {
  FitOutcome out;
  out.model = newman::newman_model(newman::make_newman(n));
  out.report = maxerror::max_error(out.model);
  out.r = n;
  return out;
}

FitOutcome run_fit(const ExperimentConfig& cfg) {
  switch (cfg.method) {
    case Method::Newman: return fit_newman(cfg.order);
    case Method::Aaa: return fit_aaa(make_dataset(cfg), cfg.add_zero, cfg.order);
    case Method::Loewner: {
      loewner::TruncationMode mode = loewner::FixedRank{cfg.order};
      if (cfg.delta) mode = loewner::RelativeTolerance{*cfg.delta};
      return fit_loewner(make_dataset(cfg), cfg.partition, cfg.add_zero, mode);
    }
  }
  throw ConfigError("run_fit: unknown method");
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  if (cfg.order_min < 1 || cfg.order_max < cfg.order_min)
    throw ConfigError("sweep: need 1 <= order_min <= order_max");
  const auto ds = make_dataset(cfg);

  auto bound_or_nan = [](bounds::BoundKind k, int n) {
    return n >= bounds::min_valid_n(k) ? bounds::bound_value(k, n) : kNaN;
  };
  std::vector<SweepRow> rows;
  auto push = [&](int order, std::string method, auto&& compute) {
    SweepRow row{order, std::move(method), kNaN, false,
                 bound_or_nan(bounds::BoundKind::NewmanUpper, order),
                 bound_or_nan(bounds::BoundKind::BulanovLower, order),
                 bound_or_nan(bounds::BoundKind::StahlEstimate, order)};
    try {
      const auto rep = compute();
      row.eps_total = rep.eps_total;
      row.valid = rep.valid;
    } catch (const Error&) {
      // recorded as a NaN row
    }
    rows.push_back(std::move(row));
  };

  for (const auto scheme : {PartitionScheme::Split, PartitionScheme::Alternating, PartitionScheme::Same}) {
    const std::string name = "loewner-" + std::string(to_string(scheme));
    std::optional<loewner::LoewnerPencil> pencil;
    std::optional<linalg::Svd> dec;
    try {
      auto pd = partition(ds, scheme);
      if (cfg.add_zero && !pd.contains_abscissa(0.0)) pd = add_origin(std::move(pd));
      pencil = loewner::build_pencil(pd);
      dec = linalg::svd(pencil->L);
    } catch (const Error&) {
    }
    for (int r = cfg.order_min; r <= cfg.order_max; ++r)
      push(r, name, [&] {
        if (!dec) throw Error("no pencil");
        return maxerror::max_error(loewner::realize(*pencil, loewner::svd_truncate(*dec, loewner::FixedRank{r})));
      });
  }

  {
    MeasurementSet data = ds;
    if (cfg.add_zero) append_origin(data);
    std::optional<aaa::AaaResult> fit;
    try {
      fit = aaa::aaa_fit(data, aaa::StopAtOrder{cfg.order_max});
    } catch (const Error&) {
    }
    // the greedy fit is nested: the order-r form is the r-th iteration of the largest fit
    for (int r = cfg.order_min; r <= cfg.order_max; ++r)
      push(r, "aaa", [&] {
        if (!fit || static_cast<std::size_t>(r) >= fit->trace.iterations.size()) throw Error("aaa stopped early");
        return maxerror::max_error(aaa::aaa_realization(fit->trace.iterations[r].form));
      });
  }

  for (int r = cfg.order_min; r <= cfg.order_max; ++r)
    push(r, "newman", [&] { return fit_newman(std::max(r, 2)).report; });

  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::tie(x.method, x.order) < std::tie(y.method, y.order);
  });
  return rows;
}

std::vector<TableCell> published_table(int id) {
  switch (id) {
    case 2:
      return grid(kFamilies, kSchemes, {33, 50, 52, 37, 65, 64, 38, 66, 65, 38, 68, 68});
    case 3:
      return grid(kFamilies, {"split", "alternating", "same", "aaa"},
                  {1.9920e-04, 9.8725e-05, 7.9058e-05, 1.0909e-04,  //
                   1.4965e-04, 6.1767e-05, 6.1489e-05, 7.4823e-05,  //
                   1.9350e-04, 1.9083e-04, 1.9018e-04, 1.5441e-04,  //
                   1.4451e-04, 5.5814e-05, 5.5785e-05, 1.7575e-04});
    case 4:
      return grid(kDeltas, kSchemes, {28, 54, 54, 34, 64, 64, 40, 76, 76, 46, 88, 88});
    case 5:
      return grid(kDeltas, {"split", "alternating", "same", "aaa"},
                  {1.6347e-03, 1.6486e-06, 5.2023e-06, 1.1786e-06,  //
                   2.5377e-04, 4.8252e-07, 5.4574e-07, 6.5291e-07,  //
                   2.5244e-05, 4.1101e-07, 3.9698e-07, 6.4343e-07,  //
                   8.5655e-06, 5.2722e-07, 3.6259e-07, 3.7328e-07});
    default:
      throw ArgumentError(fmt::format("unknown table {}", id));
  }
}

Table reproduce_table(int id) {
  static const std::map<int, std::pair<std::string, bool>> titles{
      {2, {"Loewner singular values above 2.2204e-16 (relative), 1024 points per side + origin", true}},
      {3, {"Maximum error at order r = 28, 1024 points per side + origin", false}},
      {4, {"Retained order for tolerance delta, 128 Newman points per side + origin", true}},
      {5, {"Maximum error for tolerance delta, 128 Newman points per side + origin", false}},
  };
  const auto it = titles.find(id);
  if (it == titles.end()) throw ArgumentError(fmt::format("unknown table {}", id));
  Table t{id, it->second.first, it->second.second, {}};
  TableRunner runner;
  for (const auto& c : published_table(id)) t.cells.push_back(runner.cell(id, c.row, c.column));
  return t;
}

TableCell reproduce_cell(int id, const std::string& row, const std::string& column) {
  TableRunner runner;
  return runner.cell(id, row, column);
}

}  // namespace ratapprox::experiments
