// SPDX-License-Identifier: Apache-2.0

#include "udn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "udn/parallel.hpp"

namespace udn {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += kGolden;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic per-drop stream regardless of thread scheduling.
std::mt19937_64 drop_engine(std::uint64_t master_seed, long drop) {
  std::uint64_t st = master_seed + (static_cast<std::uint64_t>(drop) + 1) *
                                       0xD1B54A32D192ED03ULL;
  const std::uint64_t s = splitmix64(st);
  return std::mt19937_64(s);
}

// Uniform-grid nearest-neighbour index over points on [-rad, rad]^2.
class SpatialGrid {
 public:
  SpatialGrid(const std::vector<double>& xs, const std::vector<double>& ys,
              double rad, double density_per_km2)
      : xs_(xs), ys_(ys), rad_(rad) {
    const double target = 2.0 / std::sqrt(std::max(density_per_km2, 1e-9));
    k_ = std::clamp(static_cast<int>(2.0 * rad / target), 1, 512);
    cell_ = 2.0 * rad / k_;
    bins_.assign(static_cast<size_t>(k_) * k_, {});
    for (size_t i = 0; i < xs.size(); ++i)
      bins_[bin_of(xs[i], ys[i])].push_back(static_cast<int>(i));
  }

  int nearest(double x, double y) const {
    const int bx = coord(x);
    const int by = coord(y);
    int best = -1;
    double best_d2 = INFINITY;
    for (int ring = 0; ring < 2 * k_; ++ring) {
      if (best >= 0) {
        const double dmin = (ring - 1) * cell_;
        if (dmin > 0.0 && dmin * dmin > best_d2) break;
      }
      bool any_cell = false;
      for (int dy = -ring; dy <= ring; ++dy) {
        const int cy = by + dy;
        if (cy < 0 || cy >= k_) continue;
        for (int dx = -ring; dx <= ring; ++dx) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          const int cx = bx + dx;
          if (cx < 0 || cx >= k_) continue;
          any_cell = true;
          for (int i : bins_[static_cast<size_t>(cy) * k_ + cx]) {
            const double ddx = xs_[i] - x;
            const double ddy = ys_[i] - y;
            const double d2 = ddx * ddx + ddy * ddy;
            if (d2 < best_d2) {
              best_d2 = d2;
              best = i;
            }
          }
        }
      }
      if (!any_cell && best >= 0) break;
    }
    return best;
  }

 private:
  int coord(double v) const {
    return std::clamp(static_cast<int>((v + rad_) / cell_), 0, k_ - 1);
  }
  size_t bin_of(double x, double y) const {
    return static_cast<size_t>(coord(y)) * k_ + coord(x);
  }
  const std::vector<double>& xs_;
  const std::vector<double>& ys_;
  double rad_;
  int k_;
  double cell_;
  std::vector<std::vector<int>> bins_;
};

// Distance beyond which the LOS probability is negligible (serving and
// interfering LOS links past this radius contribute nothing measurable).
double los_reach(const LosProbabilityModel& los, double fallback) {
  if (los.kind == LosProbabilityModel::Kind::Constant)
    return los.p > 0.0 ? fallback : 0.0;
  double d = 1e-3;
  for (int i = 0; i < 64; ++i) {
    if (los_probability(los, d) < 1e-5) return d;
    d *= 2.0;
  }
  return d;
}

}  // namespace

double auto_disk_radius(const Scenario& scn) {
  scn.validate();
  const PathLossParams& pl = scn.pathloss;
  DistanceLaw law(scn.lambda, pl, scn.los);
  const double r6 = law.tail_radius(1e-6);  // equivalent-LOS units

  // physical reach of the candidate serving BSs
  const double nlos_reach = equivalent_distance_inverse(pl, r6);
  double rad = std::max({1.5 * nlos_reach, 1.2 * los_reach(scn.los, r6),
                         3.0 / std::sqrt(scn.lambda)});

  // enlarge until the mean interference truncated at the edge is below
  // 1e-3 of the received power at the median serving distance
  double lo = 1e-4, hi = r6;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (law.tail_probability(mid) > 0.5 ? lo : hi) = mid;
  }
  const double median_r = 0.5 * (lo + hi);
  const double signal = pl.k_los * std::pow(median_r, -pl.beta_los);
  const double lam_i = interferer_density(scn.load, scn.lambda);
  auto truncated_bound = [&](double rd) {
    double b = 0.0;
    if (pl.beta_los > 2.0)
      b += pl.k_los * los_probability(scn.los, rd) *
           std::pow(rd, 2.0 - pl.beta_los) / (pl.beta_los - 2.0);
    else if (scn.los.kind != LosProbabilityModel::Kind::Constant)
      // sub-quadratic LOS decay: rely on the LOS-probability cutoff
      b += pl.k_los * los_probability(scn.los, rd) *
           std::pow(rd, 2.0 - pl.beta_los);
    if (pl.beta_nlos > 2.0)
      b += pl.k_nlos * std::pow(rd, 2.0 - pl.beta_nlos) /
           (pl.beta_nlos - 2.0);
    else
      throw std::invalid_argument(
          "NLOS exponent <= 2: truncated interference does not vanish");
    return 2.0 * M_PI * lam_i * b;
  };
  for (int i = 0; i < 40; ++i) {
    if (truncated_bound(rad) <= 1e-3 * signal) break;
    rad *= 1.3;
  }
  return rad;
}

EmpiricalStats simulate_sinr(const SimConfig& config,
                             const std::vector<double>& thresholds_linear) {
  const Scenario& scn = config.scenario;
  scn.validate();
  if (config.drops <= 0) throw std::invalid_argument("drops must be positive");
  const double rad = config.disk_radius_km > 0.0 ? config.disk_radius_km
                                                 : auto_disk_radius(scn);
  const double area = M_PI * rad * rad;
  const double mean_bs = scn.lambda * area;
  const bool reuse = scn.load.kind == LoadModel::Kind::FrequencyReuse;
  const bool partial = scn.load.kind == LoadModel::Kind::PartiallyLoaded;
  const double mean_users = partial ? scn.load.lambda_u * area : 0.0;
  // load-forced empty interferer field (used by degenerate tests)
  const bool no_interference = interferer_density(scn.load, scn.lambda) <= 0.0;

  std::vector<double> sinr(config.drops);
  std::vector<long> empties(config.drops, 0);

  parallel_for(config.drops, config.threads, [&](long drop) {
    std::mt19937_64 eng = drop_engine(config.seed, drop);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::poisson_distribution<long> bs_count(mean_bs);

    long n = 0;
    std::vector<double> x, y, r, gain;
    std::vector<char> los;
    for (;;) {
      n = bs_count(eng);
      if (n > 0) break;
      ++empties[drop];
    }
    x.resize(n);
    y.resize(n);
    r.resize(n);
    los.resize(n);
    gain.resize(n);
    for (long i = 0; i < n; ++i) {
      const double rr = rad * std::sqrt(uni(eng));
      const double th = 2.0 * M_PI * uni(eng);
      x[i] = rr * std::cos(th);
      y[i] = rr * std::sin(th);
      r[i] = std::max(rr, 1e-9);
      los[i] = uni(eng) < los_probability(scn.los, r[i]) ? 1 : 0;
      gain[i] = path_gain(scn.pathloss, r[i], los[i] != 0);
    }
    long serving = 0;
    for (long i = 1; i < n; ++i)
      if (gain[i] > gain[serving]) serving = i;

    std::vector<char> active(n, 1);
    if (reuse) {
      const double keep = 1.0 / scn.load.n;
      for (long i = 0; i < n; ++i)
        if (i != serving) active[i] = uni(eng) < keep ? 1 : 0;
    } else if (partial) {
      std::fill(active.begin(), active.end(), 0);
      std::poisson_distribution<long> ue_count(mean_users);
      const long m = ue_count(eng);
      SpatialGrid grid(x, y, rad, scn.lambda);
      for (long u = 0; u < m; ++u) {
        const double rr = rad * std::sqrt(uni(eng));
        const double th = 2.0 * M_PI * uni(eng);
        const int b = grid.nearest(rr * std::cos(th), rr * std::sin(th));
        if (b >= 0) active[b] = 1;
      }
      active[serving] = 1;  // the serving BS always transmits
    }

    std::exponential_distribution<double> fading(scn.fading.mu);
    const double s_pow = fading(eng) * gain[serving];
    double interference = 0.0;
    if (!no_interference) {
      for (long i = 0; i < n; ++i) {
        if (i == serving || !active[i]) continue;
        interference += fading(eng) * gain[i];
      }
    }
    sinr[drop] = s_pow / (scn.sigma2 + interference);
  });

  EmpiricalStats out;
  out.thresholds = thresholds_linear;
  out.drops_used = config.drops;
  out.disk_radius_km = rad;
  for (long e : empties) out.empty_resampled += e;
  const double n = static_cast<double>(config.drops);
  for (double th : thresholds_linear) {
    long c = 0;
    for (double v : sinr)
      if (v > th) ++c;
    const double p = c / n;
    out.ccdf.push_back(p);
    out.half_width.push_back(1.96 * std::sqrt(p * (1.0 - p) / n));
  }
  double mean = 0.0;
  for (double v : sinr) mean += std::log2(1.0 + v);
  mean /= n;
  double var = 0.0;
  for (double v : sinr) {
    const double d = std::log2(1.0 + v) - mean;
    var += d * d;
  }
  var /= std::max(1.0, n - 1.0);
  out.mean_log2_rate = mean;
  out.rate_half_width = 1.96 * std::sqrt(var / n);
  return out;
}

ActiveFraction simulate_active_fraction(double lambda_per_km2,
                                        double lambda_u_per_km2,
                                        double radius_km, long drops,
                                        std::uint64_t seed, int threads) {
  if (!(lambda_per_km2 > 0.0) || lambda_u_per_km2 < 0.0 ||
      !(radius_km > 0.0) || drops <= 0)
    throw std::invalid_argument("invalid active-fraction simulation inputs");
  const double area = M_PI * radius_km * radius_km;
  const double inner = 0.6 * radius_km;

  std::vector<long> counted(drops, 0), hits(drops, 0);
  parallel_for(drops, threads, [&](long drop) {
    std::mt19937_64 eng = drop_engine(seed ^ 0xA5A5A5A5A5A5A5A5ULL, drop);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::poisson_distribution<long> bs_count(lambda_per_km2 * area);
    std::poisson_distribution<long> ue_count(lambda_u_per_km2 * area);
    const long n = bs_count(eng);
    if (n == 0) return;
    std::vector<double> x(n), y(n), rr(n);
    for (long i = 0; i < n; ++i) {
      const double r = radius_km * std::sqrt(uni(eng));
      const double th = 2.0 * M_PI * uni(eng);
      x[i] = r * std::cos(th);
      y[i] = r * std::sin(th);
      rr[i] = r;
    }
    std::vector<char> active(n, 0);
    SpatialGrid grid(x, y, radius_km, lambda_per_km2);
    const long m = ue_count(eng);
    for (long u = 0; u < m; ++u) {
      const double r = radius_km * std::sqrt(uni(eng));
      const double th = 2.0 * M_PI * uni(eng);
      const int b = grid.nearest(r * std::cos(th), r * std::sin(th));
      if (b >= 0) active[b] = 1;
    }
    for (long i = 0; i < n; ++i) {
      if (rr[i] > inner) continue;  // keep boundary cells out
      ++counted[drop];
      if (active[i]) ++hits[drop];
    }
  });

  long tot = 0, act = 0;
  for (long i = 0; i < drops; ++i) {
    tot += counted[i];
    act += hits[i];
  }
  ActiveFraction out;
  if (tot == 0) return out;
  out.value = static_cast<double>(act) / tot;
  out.half_width =
      1.96 * std::sqrt(out.value * (1.0 - out.value) / tot);
  return out;
}

}  // namespace udn
