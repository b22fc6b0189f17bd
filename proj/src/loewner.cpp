#include "ratapprox/loewner.hpp"

#include <algorithm>
#include <string>

#include <fmt/core.h>

#include "ratapprox/error.hpp"
#include "ratapprox/parallel.hpp"

namespace ratapprox::loewner {
namespace {

struct PencilLayout {
  Eigen::Index rows;
  Eigen::Index base_cols;  // columns before the extras
  Eigen::Index cols;
  bool hermite;
};

// Validates the data and fills the point/value vectors; entries are left for the kernel.
PencilLayout prepare(const PartitionedData& pd, LoewnerPencil& p) {
  const bool hermite = pd.scheme == PartitionScheme::Same;
  if (hermite) {
    if (!pd.hermite || pd.hermite->size() != pd.right.size())
      throw DataError("build_pencil: same scheme needs one Hermite entry per node");
    if (pd.left.size() != pd.right.size())
      throw DataError("build_pencil: same scheme needs identical left and right sets");
    for (std::size_t i = 0; i < pd.left.size(); ++i)
      if (pd.left[i].tau != pd.right[i].tau || pd.left[i].f != pd.right[i].f)
        throw DataError("build_pencil: same scheme needs identical left and right sets");
  }
  if (pd.left.empty() || pd.right.size() + pd.extra.size() == 0)
    throw DataError("build_pencil: empty left or right data");

  const auto rows = static_cast<Eigen::Index>(pd.left.size());
  const auto base = static_cast<Eigen::Index>(pd.right.size());
  const auto cols = base + static_cast<Eigen::Index>(pd.extra.size());
  p.mu.resize(rows);
  p.V.resize(rows);
  p.lambda.resize(cols);
  p.W.resize(cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    p.mu[i] = pd.left[i].tau;
    p.V[i] = pd.left[i].f;
  }
  for (Eigen::Index j = 0; j < base; ++j) {
    p.lambda[j] = pd.right[j].tau;
    p.W[j] = pd.right[j].f;
  }
  for (Eigen::Index j = base; j < cols; ++j) {
    p.lambda[j] = pd.extra[j - base].tau;
    p.W[j] = pd.extra[j - base].f;
  }

  // coincident abscissas are only allowed on the Hermite diagonal
  std::vector<double> left_pts(p.mu.data(), p.mu.data() + rows);
  std::sort(left_pts.begin(), left_pts.end());
  for (Eigen::Index j = hermite ? base : 0; j < cols; ++j) {
    if (std::binary_search(left_pts.begin(), left_pts.end(), p.lambda[j]))
      throw DataError(fmt::format("build_pencil: left and right abscissa coincide at {:.17g} "
                                  "(division by zero)", p.lambda[j]));
  }
  if (hermite) {
    std::vector<double> sorted_right(p.lambda.data(), p.lambda.data() + base);
    std::sort(sorted_right.begin(), sorted_right.end());
    if (std::adjacent_find(sorted_right.begin(), sorted_right.end()) != sorted_right.end())
      throw DataError("build_pencil: repeated Hermite node");
  }
  p.L.resize(rows, cols);
  p.Ls.resize(rows, cols);
  return {rows, base, cols, hermite};
}

inline void fill_row(const PencilLayout& lay, const PartitionedData& pd, LoewnerPencil& p,
                     Eigen::Index i) {
  const double mu = p.mu[i];
  const double v = p.V[i];
  for (Eigen::Index j = 0; j < lay.cols; ++j) {
    if (lay.hermite && j == i) {
      const auto& h = (*pd.hermite)[static_cast<std::size_t>(i)];
      p.L(i, j) = h.d1;
      p.Ls(i, j) = h.d2;
      continue;
    }
    const double lam = p.lambda[j];
    const double w = p.W[j];
    const double den = mu - lam;
    p.L(i, j) = (v - w) / den;
    p.Ls(i, j) = (mu * v - lam * w) / den;
  }
}

}  // namespace

LoewnerPencil build_pencil(const PartitionedData& pd) {
  LoewnerPencil p;
  const auto lay = prepare(pd, p);
#pragma omp parallel for schedule(static) num_threads(max_threads())
  for (Eigen::Index i = 0; i < lay.rows; ++i) fill_row(lay, pd, p, i);
  return p;
}

LoewnerPencil build_pencil_serial(const PartitionedData& pd) {
  LoewnerPencil p;
  const auto lay = prepare(pd, p);
  for (Eigen::Index i = 0; i < lay.rows; ++i) fill_row(lay, pd, p, i);
  return p;
}

SylvesterResiduals sylvester_residuals(const LoewnerPencil& p) {
  const auto ones_r = Vector::Ones(p.cols());
  const auto ones_l = Vector::Ones(p.rows());
  const DenseMatrix rhs1 = p.V * ones_r.transpose() - ones_l * p.W.transpose();
  const DenseMatrix lhs1 = p.mu.asDiagonal() * p.L - p.L * p.lambda.asDiagonal();
  const DenseMatrix rhs2 =
      p.mu.asDiagonal() * p.V * ones_r.transpose() - ones_l * p.W.transpose() * p.lambda.asDiagonal();
  const DenseMatrix lhs2 = p.mu.asDiagonal() * p.Ls - p.Ls * p.lambda.asDiagonal();
  auto rel = [](const DenseMatrix& diff, const DenseMatrix& ref) {
    const double nr = ref.norm();
    return nr > 0 ? diff.norm() / nr : diff.norm();
  };
  return {rel(lhs1 - rhs1, rhs1), rel(lhs2 - rhs2, rhs2)};
}

std::pair<double, double> shift_relation_residuals(const LoewnerPencil& p) {
  const auto ones_r = Vector::Ones(p.cols());
  const auto ones_l = Vector::Ones(p.rows());
  const double scale = p.Ls.norm() > 0 ? p.Ls.norm() : 1.0;
  const DenseMatrix r1 = p.Ls - p.L * p.lambda.asDiagonal() - p.V * ones_r.transpose();
  const DenseMatrix r2 = p.Ls - p.mu.asDiagonal() * p.L - ones_l * p.W.transpose();
  return {r1.norm() / scale, r2.norm() / scale};
}

Eigen::Index count_significant_svals(const Vector& s, double delta) {
  if (s.size() == 0 || s[0] == 0.0) return 0;
  Eigen::Index count = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] / s[0] > delta) ++count;
  return count;
}

Eigen::Index count_significant_svals(const LoewnerPencil& p, double delta) {
  return count_significant_svals(linalg::singular_values(p.L), delta);
}

SvdTruncation svd_truncate(const linalg::Svd& dec, const TruncationMode& mode) {
  const Eigen::Index kmax = dec.S.size();
  if (const auto* fr = std::get_if<FixedRank>(&mode); fr && (fr->r < 0 || fr->r > kmax))
    throw ArgumentError(fmt::format("svd_truncate: rank {} exceeds min dimension {}", fr->r, kmax));
  SvdTruncation t;
  t.r = std::visit(
      [&](const auto& m) -> Eigen::Index {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FixedRank>) return m.r;
        else return count_significant_svals(dec.S, m.delta);
      },
      mode);
  t.singular_values = dec.S;
  t.Xr = dec.U.leftCols(t.r);
  t.Yr = dec.Vt.topRows(t.r).transpose();
  return t;
}

SvdTruncation svd_truncate(const LoewnerPencil& p, const TruncationMode& mode) {
  const Eigen::Index kmax = std::min(p.rows(), p.cols());
  if (const auto* fr = std::get_if<FixedRank>(&mode); fr && (fr->r < 0 || fr->r > kmax))
    throw ArgumentError(fmt::format("svd_truncate: rank {} exceeds min dimension {}", fr->r, kmax));
  return svd_truncate(linalg::svd(p.L), mode);
}

RationalApproximant realize(const LoewnerPencil& p, const SvdTruncation& t) {
  if (t.r <= 0) throw ArgumentError("realize: truncation rank must be positive");
  if (t.Xr.rows() != p.rows() || t.Yr.rows() != p.cols() || t.Xr.cols() != t.r || t.Yr.cols() != t.r)
    throw ArgumentError("realize: truncation does not match the pencil");
  RationalApproximant m;
  const DenseMatrix XtL = t.Xr.transpose() * p.L;
  const DenseMatrix XtLs = t.Xr.transpose() * p.Ls;
  m.E = -(XtL * t.Yr);
  m.A = -(XtLs * t.Yr);
  m.B = t.Xr.transpose() * p.V;
  m.C = t.Yr.transpose() * p.W;
  m.D = 0.0;
  m.num_degree = static_cast<int>(t.r) - 1;
  m.den_degree = static_cast<int>(t.r);
  if (pencil_looks_singular(m))
    throw DegenerateModelError("realize: projected pencil is singular at the probe shifts");
  return m;
}

}  // namespace ratapprox::loewner
