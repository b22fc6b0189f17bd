#include "ratapprox/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ratapprox/elliptic.hpp"
#include "ratapprox/error.hpp"

namespace ratapprox {
namespace {

// Linspace and logspace need a > 0; Chebyshev nodes stay interior so a = 0 is fine there.
void validate(const IntervalConfig& cfg, bool allow_zero_lower) {
  if (cfg.n < 1) throw ConfigError("interval config: n must be >= 1");
  if (!std::isfinite(cfg.a) || !std::isfinite(cfg.b)) throw ConfigError("interval config: non-finite endpoint");
  if (cfg.a >= cfg.b) throw ConfigError("interval config: require a < b");
  if (allow_zero_lower ? cfg.a < 0.0 : cfg.a <= 0.0) throw ConfigError("interval config: require a > 0");
  if (cfg.b > 1.0) throw ConfigError("interval config: require b <= 1");
}

}  // namespace

std::string_view to_string(PointFamily f) {
  switch (f) {
    case PointFamily::Linspace: return "linspace";
    case PointFamily::Logspace: return "logspace";
    case PointFamily::Chebyshev: return "chebyshev";
    case PointFamily::Zolotarev: return "zolotarev";
    case PointFamily::Newman: return "newman";
  }
  return "?";
}

PointFamily parse_point_family(std::string_view name) {
  for (auto f : {PointFamily::Linspace, PointFamily::Logspace, PointFamily::Chebyshev,
                 PointFamily::Zolotarev, PointFamily::Newman})
    if (name == to_string(f)) return f;
  throw ConfigError("unknown point family '" + std::string(name) + "'");
}

EllipticModulus EllipticModulus::from_interval(double a, double b) {
  if (!(a > 0.0)) throw DomainError("elliptic modulus: a = 0 degenerates the modulus");
  if (!(a < b)) throw ConfigError("elliptic modulus: require a < b");
  EllipticModulus m;
  m.ell = a / b;
  m.ell_prime = std::sqrt((1.0 - m.ell) * (1.0 + m.ell));
  m.K_prime = complete_elliptic_K_complement(m.ell);
  return m;
}

std::vector<double> linspace_points(const IntervalConfig& cfg) {
  validate(cfg, false);
  if (cfg.n == 1) return {cfg.a};
  std::vector<double> p(cfg.n);
  const double h = (cfg.b - cfg.a) / (cfg.n - 1);
  for (int i = 0; i < cfg.n; ++i) p[i] = cfg.a + i * h;
  p.back() = cfg.b;
  return p;
}

std::vector<double> logspace_points(const IntervalConfig& cfg) {
  validate(cfg, false);
  if (cfg.n == 1) return {cfg.a};
  std::vector<double> p(cfg.n);
  const double la = std::log10(cfg.a);
  const double lb = std::log10(cfg.b);
  for (int i = 0; i < cfg.n; ++i) p[i] = std::pow(10.0, la + i * (lb - la) / (cfg.n - 1));
  p.front() = cfg.a;
  p.back() = cfg.b;
  return p;
}

std::vector<double> chebyshev_points(const IntervalConfig& cfg) {
  validate(cfg, true);
  std::vector<double> p(cfg.n);
  for (int k = 1; k <= cfg.n; ++k) {
    const double theta = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * cfg.n);
    p[k - 1] = 0.5 * (cfg.a + cfg.b) + 0.5 * (cfg.a - cfg.b) * std::cos(theta);
  }
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<double> zolotarev_points(const IntervalConfig& cfg) {
  if (cfg.a == 0.0) throw DomainError("zolotarev_points: a = 0 degenerates the elliptic modulus");
  validate(cfg, false);
  const auto mod = EllipticModulus::from_interval(cfg.a, cfg.b);
  std::vector<double> p(cfg.n);
  for (int i = 1; i <= cfg.n; ++i) {
    const double u = 2.0 * i * mod.K_prime / (2.0 * cfg.n);
    const auto [sn, cn] = jacobi_sn_cn(u, mod.ell_prime, mod.ell);
    const double v = std::sqrt(cfg.a * cfg.a * sn * sn + cfg.b * cfg.b * cn * cn);
    p[i - 1] = std::clamp(v, cfg.a, cfg.b);
  }
  // the formula runs from b down to a as i grows
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<double> newman_points(int n) {
  if (n < 1) throw ConfigError("newman_points: n must be >= 1");
  const double log_alpha = -std::sqrt(static_cast<double>(n)) / n;
  std::vector<double> p(n);
  for (int j = 0; j < n; ++j) p[j] = std::exp((n - j) * log_alpha);
  return p;
}

std::vector<double> generate_points(PointFamily family, const IntervalConfig& cfg) {
  switch (family) {
    case PointFamily::Linspace: return linspace_points(cfg);
    case PointFamily::Logspace: return logspace_points(cfg);
    case PointFamily::Chebyshev: return chebyshev_points(cfg);
    case PointFamily::Zolotarev: return zolotarev_points(cfg);
    case PointFamily::Newman: return newman_points(cfg.n);
  }
  throw ConfigError("generate_points: unknown family");
}

std::vector<double> symmetric_extend(const std::vector<double>& points) {
  std::vector<double> out;
  out.reserve(2 * points.size());
  for (double p : points) {
    if (!(p > 0.0)) throw DomainError("symmetric_extend: points must be strictly positive");
    out.push_back(-p);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ratapprox
