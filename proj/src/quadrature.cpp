// SPDX-License-Identifier: Apache-2.0

#include "udn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace udn {
namespace {

// 15-point Kronrod abscissae (positive half) with the embedded 7-point
// Gauss rule; standard QUADPACK values.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double error;
};

// One (G7,K15) panel; the |K-G| difference is used as a conservative
// error estimate, which the adaptive loop drives below tolerance.
Segment gk15(const Integrand& f, double a, double b, int& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  ++evals;
  if (!std::isfinite(fc))
    throw QuadratureFailure("integrand returned non-finite value at x=" +
                                std::to_string(c),
                            0.0, INFINITY);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    evals += 2;
    if (!std::isfinite(f1) || !std::isfinite(f2))
      throw QuadratureFailure(
          "integrand returned non-finite value near x=" + std::to_string(c),
          0.0, INFINITY);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = resk * h;
  s.error = std::abs((resk - resg) * h);
  return s;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           double abs_tol, double rel_tol, int max_subdiv) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  int evals = 0;
  std::vector<Segment> segs;
  segs.push_back(gk15(f, a, b, evals));
  auto total = [&segs]() {
    double v = 0, e = 0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.error;
    }
    return std::pair<double, double>(v, e);
  };
  while (true) {
    auto [v, e] = total();
    const double tol = std::max(abs_tol, rel_tol * std::abs(v));
    if (e <= tol) {
      out.value = v;
      out.error = e;
      out.evaluations = evals;
      out.converged = true;
      return out;
    }
    if ((int)segs.size() >= max_subdiv) {
      out.value = v;
      out.error = e;
      out.evaluations = evals;
      out.converged = false;
      return out;
    }
    // split the segment with the largest error estimate
    size_t worst = 0;
    for (size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Segment w = segs[worst];
    const double mid = 0.5 * (w.a + w.b);
    if (mid <= w.a || mid >= w.b) {
      // interval exhausted at machine precision
      out.value = v;
      out.error = e;
      out.evaluations = evals;
      out.converged = e <= std::max(abs_tol, 1e-12 * std::abs(v));
      return out;
    }
    segs[worst] = gk15(f, w.a, mid, evals);
    segs.push_back(gk15(f, mid, w.b, evals));
  }
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         double abs_tol, double rel_tol,
                                         int max_subdiv) {
  // v = a + t/(1-t), dv = dt/(1-t)^2, t in [0,1)
  auto g = [&f, a](double t) {
    const double om = 1.0 - t;
    const double v = a + t / om;
    return f(v) / (om * om);
  };
  // stop just short of t=1: the caller guarantees decay, and the mapped
  // integrand vanishes there faster than the Jacobian grows
  return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, rel_tol, max_subdiv);
}

double integrate_or_throw(const Integrand& f, double a, double b,
                          double abs_tol, double rel_tol, int max_subdiv) {
  QuadratureResult r = integrate(f, a, b, abs_tol, rel_tol, max_subdiv);
  if (!r.converged)
    throw QuadratureFailure("quadrature did not reach tolerance (achieved " +
                                std::to_string(r.error) + ")",
                            r.value, r.error);
  return r.value;
}

double integrate_semi_infinite_or_throw(const Integrand& f, double a,
                                        double abs_tol, double rel_tol,
                                        int max_subdiv) {
  QuadratureResult r =
      integrate_semi_infinite(f, a, abs_tol, rel_tol, max_subdiv);
  if (!r.converged)
    throw QuadratureFailure("quadrature did not reach tolerance (achieved " +
                                std::to_string(r.error) + ")",
                            r.value, r.error);
  return r.value;
}

const GaussLegendreRule& gauss_legendre(int n) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    rule.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.w[n - 1 - i] = rule.w[i];
  }
  return cache[n] = std::move(rule);
}

}  // namespace udn
