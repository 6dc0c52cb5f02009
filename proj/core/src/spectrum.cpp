#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hypergen/error.hpp"
#include "hypergen/patterns.hpp"
#include "hypergen/rng.hpp"

namespace hypergen {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

// Two passes of classical Gram-Schmidt against `basis`.
void orthogonalize(Vec& x, const std::vector<Vec>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      const double c = dot(x, q);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * q[i];
    }
  }
}

// Unit vector orthogonal to `basis`, taken from the coordinate axes so the
// result is deterministic. Returns an empty vector if the basis is complete.
Vec fresh_direction(std::size_t dim, const std::vector<Vec>& basis) {
  for (std::size_t axis = 0; axis < dim; ++axis) {
    Vec x(dim, 0.0);
    x[axis] = 1.0;
    orthogonalize(x, basis);
    const double nx = norm(x);
    if (nx > 0.5) {
      for (auto& xi : x) xi /= nx;
      return x;
    }
  }
  return {};
}

// Singular values of a small dense square matrix (column-major columns) by
// one-sided Jacobi rotations; accurate to high relative precision.
std::vector<double> jacobi_singular_values(std::vector<Vec> cols) {
  const std::size_t n = cols.size();
  constexpr double tol = 1e-15;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot(cols[p], cols[p]);
        const double beta = dot(cols[q], cols[q]);
        const double gamma = dot(cols[p], cols[q]);
        if (gamma == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < cols[p].size(); ++i) {
          const double xp = cols[p][i], xq = cols[q][i];
          cols[p][i] = c * xp - s * xq;
          cols[q][i] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv;
  sv.reserve(n);
  for (const auto& c : cols) sv.push_back(norm(c));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace

std::vector<double> singular_value_spectrum(const TemporalHypergraph& h, std::size_t k) {
  if (k == 0) throw InvalidArgumentError("spectrum size k must be at least 1");
  if (h.num_edges() == 0 || h.num_nodes() == 0)
    throw UndefinedMetricError("singular values of an empty hypergraph are undefined");

  const IncidenceMatrix mat = h.incidence_matrix();
  // Bidiagonalize the orientation whose column space is the smaller one, so
  // that `inner` full steps give an exact factorization A V = U B.
  const bool transpose = mat.rows() < mat.cols();
  const std::size_t outer = transpose ? mat.cols() : mat.rows();
  const std::size_t inner = transpose ? mat.rows() : mat.cols();
  auto apply = [&](const Vec& x, Vec& y) {  // y = A x, A is outer x inner
    if (transpose)
      mat.multiply_transposed(x, y);
    else
      mat.multiply(x, y);
  };
  auto apply_t = [&](const Vec& x, Vec& y) {  // y = A^T x
    if (transpose)
      mat.multiply(x, y);
    else
      mat.multiply_transposed(x, y);
  };

  k = std::min(k, inner);
  const std::size_t steps = std::min(inner, std::max(3 * k, k + 60));

  double scale = 0.0;  // ||A||_F, for breakdown detection
  for (const auto& col : mat.columns) scale += static_cast<double>(col.size());
  scale = std::sqrt(scale);
  const double breakdown = 64.0 * std::numeric_limits<double>::epsilon() * scale;

  std::vector<Vec> us, vs;
  us.reserve(steps);
  vs.reserve(steps + 1);
  std::vector<double> alphas, betas;

  Vec v(inner);
  Rng rng(0x5eed5eedULL);
  for (auto& x : v) x = rng.uniform01() + 0.5;
  const double nv = norm(v);
  for (auto& x : v) x /= nv;
  vs.push_back(v);

  Vec u(outer), w(inner);
  for (std::size_t j = 0; j < steps; ++j) {
    apply(vs[j], u);
    if (j > 0) {
      for (std::size_t i = 0; i < outer; ++i) u[i] -= betas[j - 1] * us[j - 1][i];
    }
    orthogonalize(u, us);
    double a = norm(u);
    if (a <= breakdown) {
      a = 0.0;
      u = fresh_direction(outer, us);
    } else {
      for (auto& x : u) x /= a;
    }
    alphas.push_back(a);
    us.push_back(u);
    if (j + 1 == steps) break;

    apply_t(us[j], w);
    for (std::size_t i = 0; i < inner; ++i) w[i] -= a * vs[j][i];
    orthogonalize(w, vs);
    double b = norm(w);
    if (b <= breakdown) {
      b = 0.0;
      w = fresh_direction(inner, vs);
    } else {
      for (auto& x : w) x /= b;
    }
    betas.push_back(b);
    vs.push_back(w);
  }

  // B is upper bidiagonal: diag alphas, superdiagonal betas.
  const std::size_t l = alphas.size();
  std::vector<Vec> bcols(l, Vec(l, 0.0));
  for (std::size_t j = 0; j < l; ++j) {
    bcols[j][j] = alphas[j];
    if (j > 0) bcols[j][j - 1] = betas[j - 1];
  }
  auto sv = jacobi_singular_values(std::move(bcols));
  sv.resize(k);
  return sv;
}

}  // namespace hypergen
