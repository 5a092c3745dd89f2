#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "turan/core.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// ---------------------------------------------------------------------------
// Weight vectors
// ---------------------------------------------------------------------------

/// Nonnegative vertex weights summing to one (renormalized on construction).
class WeightVector {
 public:
  WeightVector() = default;

  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    double total = 0.0;
    for (double x : w_) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument("weights must be finite and >= 0");
      total += x;
    }
    if (!(total > 0.0)) throw InvalidArgument("weights must have positive sum");
    for (double& x : w_) x /= total;
  }

  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

  static WeightVector indicator(std::size_t n, Vertex v) {
    std::vector<double> w(n, 0.0);
    w.at(v) = 1.0;
    return WeightVector(std::move(w));
  }

  [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return w_[i]; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return w_; }
  [[nodiscard]] double max() const { return w_.empty() ? 0.0 : *std::max_element(w_.begin(), w_.end()); }

 private:
  std::vector<double> w_;
};

namespace detail {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) c_ += (sum_ - t) + v;
    else c_ += (v - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0, c_ = 0.0;
};

inline double poly_value_raw(const Hypergraph& g, std::span<const double> x) {
  CompensatedSum s;
  for (const auto& e : g.edges()) {
    double prod = 1.0;
    for (Vertex v : e) prod *= x[v];
    s.add(prod);
  }
  return static_cast<double>(factorial(g.r())) * s.value();
}

inline std::vector<double> grad_raw(const Hypergraph& g, std::span<const double> x) {
  std::vector<CompensatedSum> acc(g.n());
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      double prod = 1.0;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i) prod *= x[e[j]];
      acc[e[i]].add(prod);
    }
  }
  const double rf = static_cast<double>(factorial(g.r()));
  std::vector<double> out(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) out[i] = rf * acc[i].value();
  return out;
}

/// Second mixed partial ∂²p/∂x_a∂x_b = r! Σ_{f ∈ L({a,b})} Π_{j∈f} x_j.
inline double mixed_partial(const Hypergraph& g, std::span<const double> x, Vertex a, Vertex b) {
  CompensatedSum s;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(e.begin(), e.end(), a) || !std::binary_search(e.begin(), e.end(), b))
      continue;
    double prod = 1.0;
    for (Vertex v : e)
      if (v != a && v != b) prod *= x[v];
    s.add(prod);
  }
  return static_cast<double>(factorial(g.r())) * s.value();
}

}  // namespace detail

/// p_G(x) = r! Σ_e Π_{i∈e} x_i.
inline double poly_value(const Hypergraph& g, const WeightVector& x) {
  if (x.size() != g.n()) throw InvalidArgument("poly_value: weight vector length mismatch");
  return detail::poly_value_raw(g, x.values());
}

/// λ_i = ∂p_G/∂x_i = r! Σ_{f ∈ L(i)} Π_{j∈f} x_j.
inline std::vector<double> grad(const Hypergraph& g, const WeightVector& x) {
  if (x.size() != g.n()) throw InvalidArgument("grad: weight vector length mismatch");
  return detail::grad_raw(g, x.values());
}

/// Moves weight d = (λ_b - λ_a)/(2 r!) from a to b, capped by x_a. Never
/// decreases p_G since the mixed partial is at most r!.
inline std::vector<double> weight_shift(const Hypergraph& g, std::vector<double> x, Vertex a, Vertex b) {
  const auto lam = detail::grad_raw(g, x);
  const double d = std::min(x[a], (lam[b] - lam[a]) / (2.0 * static_cast<double>(factorial(g.r()))));
  if (d <= 0.0) return x;
  x[a] -= d;
  x[b] += d;
  return x;
}

// ---------------------------------------------------------------------------
// Lagrangian optimization
// ---------------------------------------------------------------------------

struct LagrangianOptions {
  std::size_t restarts = 50;
  std::size_t max_iters = 5000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  /// Called with every accepted iterate (all starts); for diagnostics/tests.
  std::function<void(const std::vector<double>&)> on_iterate;
};

enum class Certificate { lower_bound, exact_motzkin_straus, exact_complete };

inline std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::exact_motzkin_straus: return "exact_motzkin_straus";
    case Certificate::exact_complete: return "exact_complete";
    default: return "lower_bound";
  }
}

struct LagrangianEstimate {
  double value = 0.0;
  WeightVector weights;
  std::size_t restarts_used = 0;
  bool converged = false;
  double gradient_residual = 0.0;  ///< max over the support of |λ_i - r·value|
  Certificate certificate = Certificate::lower_bound;
};

namespace detail {

inline constexpr double kSupportThreshold = 1e-9;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Feasible region {x : lower <= x <= upper, Σx = 1}.
struct Box {
  std::vector<double> lower, upper;

  /// Euclidean projection: clamp(y - τ) with τ found by bisection.
  [[nodiscard]] std::vector<double> project(const std::vector<double>& y) const {
    const std::size_t n = y.size();
    auto mass = [&](double tau) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += std::clamp(y[i] - tau, lower[i], upper[i]);
      return s;
    };
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, y[i] - upper[i]);
      hi = std::max(hi, y[i] - lower[i]);
    }
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (mass(mid) > 1.0 ? lo : hi) = mid;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(y[i] - hi, lower[i], upper[i]);
    distribute_residual(x);
    return x;
  }

  /// Pushes 1 - Σx onto coordinates with room, keeping the bounds.
  void distribute_residual(std::vector<double>& x) const {
    for (int pass = 0; pass < 3; ++pass) {
      double resid = 1.0 - std::accumulate(x.begin(), x.end(), 0.0);
      if (resid == 0.0) return;
      std::vector<std::size_t> order(x.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
      for (std::size_t i : order) {
        if (resid == 0.0) break;
        const double room = resid > 0 ? upper[i] - x[i] : lower[i] - x[i];
        const double move = resid > 0 ? std::min(room, resid) : std::max(room, resid);
        x[i] += move;
        resid -= move;
      }
    }
  }

  /// Zero out negligible weights (where the lower bound allows) and restore Σx = 1.
  void sparsify(std::vector<double>& x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (lower[i] == 0.0 && x[i] < kSupportThreshold) x[i] = 0.0;
    distribute_residual(x);
  }
};

/// Largest λ over coordinates that may grow minus smallest λ over
/// coordinates that may shrink; zero exactly at a KKT point.
struct ViolatingPair {
  Vertex shrink = 0, grow = 0;
  double gap = 0.0;
};

inline ViolatingPair most_violating_pair(const std::vector<double>& x, const std::vector<double>& lam,
                                         const Box& box) {
  ViolatingPair vp;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > box.lower[i] + kSupportThreshold && lam[i] < lo) { lo = lam[i]; vp.shrink = static_cast<Vertex>(i); }
    if (x[i] < box.upper[i] - kSupportThreshold && lam[i] > hi) { hi = lam[i]; vp.grow = static_cast<Vertex>(i); }
  }
  vp.gap = (std::isfinite(lo) && std::isfinite(hi)) ? hi - lo : 0.0;
  return vp;
}

inline double support_residual(const std::vector<double>& x, const std::vector<double>& lam, double value,
                               unsigned r) {
  double res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > kSupportThreshold) res = std::max(res, std::abs(lam[i] - r * value));
  return res;
}

struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
};

/// Projected gradient ascent with Armijo backtracking, then pairwise weight
/// transfers between the most violating pair until the KKT gap closes.
inline AscentResult ascend(const Hypergraph& g, std::vector<double> x, const Box& box,
                           const LagrangianOptions& opts) {
  x = box.project(x);
  double value = poly_value_raw(g, x);
  double step = 1.0;

  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    const auto lam = grad_raw(g, x);
    if (most_violating_pair(x, lam, box).gap <= opts.tol) break;
    bool accepted = false;
    for (int bt = 0; bt < 50; ++bt) {
      std::vector<double> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + step * lam[i];
      y = box.project(y);
      double slope = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) slope += lam[i] * (y[i] - x[i]);
      const double v = poly_value_raw(g, y);
      if (v >= value + 1e-4 * slope && v > value) {
        x = std::move(y);
        value = v;
        accepted = true;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (opts.on_iterate) opts.on_iterate(x);
    if (!accepted) break;
  }

  // Polish: the pairwise transfer. Along e_b - e_a the polynomial is the
  // quadratic p + d(λ_b - λ_a) - d² ∂²p/∂x_a∂x_b, so the exact maximizer is
  // used; it is never shorter than the (λ_b - λ_a)/(2 r!) step.
  bool converged = false;
  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    const auto lam = grad_raw(g, x);
    const auto vp = most_violating_pair(x, lam, box);
    if (vp.gap <= opts.tol) { converged = true; break; }
    const Vertex a = vp.shrink, b = vp.grow;
    const double h = mixed_partial(g, x, a, b);
    double d = h > 0.0 ? vp.gap / (2.0 * h) : std::numeric_limits<double>::infinity();
    d = std::min({d, x[a] - box.lower[a], box.upper[b] - x[b]});
    if (!(d > 0.0)) break;
    std::vector<double> y = x;
    y[a] -= d;
    y[b] += d;
    const double v = poly_value_raw(g, y);
    if (v < value - 1e-15) break;
    x = std::move(y);
    value = v;
    if (opts.on_iterate) opts.on_iterate(x);
  }

  box.sparsify(x);
  value = poly_value_raw(g, x);
  const auto lam = grad_raw(g, x);
  converged = most_violating_pair(x, lam, box).gap <= opts.tol;
  return {std::move(x), value, converged};
}

/// Greedy "clique-like" supports: sets S where every r-subset of S is an
/// edge, grown from each vertex by descending degree.
inline std::vector<std::vector<Vertex>> greedy_complete_supports(const Hypergraph& g) {
  const auto deg = g.degrees();
  const auto cov = covered_pair_matrix(g);
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });

  std::set<std::vector<Vertex>> found;
  for (Vertex seed : order) {
    if (deg[seed] == 0) continue;
    std::vector<Vertex> s{seed};
    for (Vertex w : order) {
      if (w == seed) continue;
      bool ok = std::all_of(s.begin(), s.end(), [&](Vertex u) { return cov[u][w]; });
      if (ok && s.size() + 1 >= g.r()) {
        for (const auto& idx : all_subsets(s.size(), g.r() - 1)) {
          Edge e{w};
          for (Vertex i : idx) e.push_back(s[i]);
          std::sort(e.begin(), e.end());
          if (!g.has_edge(e)) { ok = false; break; }
        }
      }
      if (ok) s.push_back(w);
    }
    std::sort(s.begin(), s.end());
    if (s.size() >= g.r()) found.insert(std::move(s));
  }
  return {found.begin(), found.end()};
}

inline std::vector<double> random_simplex_point(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(n);
  double total = 0.0;
  for (auto& v : x) total += (v = expo(rng));
  for (auto& v : x) v /= total;
  return x;
}

/// Multistart driver shared by λ and λ_β. Starts: uniform, greedy complete
/// supports, then `restarts` seeded random points. Best value wins, ties
/// going to the earliest start.
inline LagrangianEstimate optimize(const Hypergraph& g, const Box& box, const LagrangianOptions& opts) {
  const std::size_t n = g.n();
  LagrangianEstimate best;
  if (n == 0) {
    best.converged = true;
    return best;
  }
  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0 / static_cast<double>(n));
  if (!g.empty()) {
    for (const auto& s : greedy_complete_supports(g)) {
      std::vector<double> x(n, 0.0);
      for (Vertex v : s) x[v] = 1.0 / static_cast<double>(s.size());
      starts.push_back(std::move(x));
    }
    for (std::size_t k = 0; k < opts.restarts; ++k)
      starts.push_back(random_simplex_point(n, splitmix64(opts.seed * 1000003ULL + k)));
  }

  bool have = false;
  std::vector<double> best_x;
  for (const auto& s : starts) {
    AscentResult res = g.empty() ? AscentResult{box.project(s), 0.0, true} : ascend(g, s, box, opts);
    if (!have || res.value > best.value) {
      have = true;
      best.value = res.value;
      best.converged = res.converged;
      best_x = std::move(res.x);
    }
  }
  best.weights = WeightVector(best_x);
  best.value = poly_value_raw(g, best.weights.values());
  best.restarts_used = g.empty() ? 0 : opts.restarts;
  best.gradient_residual = support_residual(best.weights.values(), grad_raw(g, best.weights.values()),
                                            best.value, g.r());
  return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Motzkin–Straus reference
// ---------------------------------------------------------------------------

namespace detail {

/// Exact clique number of a 2-graph (Carraghan–Pardalos branch and bound).
inline std::size_t clique_number(const Hypergraph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
  for (const auto& e : g.edges()) {
    adj[e[0]].set(e[1]);
    adj[e[1]].set(e[0]);
  }
  std::size_t best = 1;
  auto rec = [&](auto&& self, boost::dynamic_bitset<> cand, std::size_t size) -> void {
    if (cand.none()) {
      best = std::max(best, size);
      return;
    }
    while (cand.any()) {
      if (size + cand.count() <= best) return;
      const std::size_t v = cand.find_first();
      cand.reset(v);
      self(self, cand & adj[v], size + 1);
    }
  };
  rec(rec, boost::dynamic_bitset<>(n).set(), 0);
  return best;
}

}  // namespace detail

/// λ(G) = 1 - 1/ω(G) for a 2-graph (0 for the vertexless graph).
inline double motzkin_straus_reference(const Hypergraph& g) {
  if (g.r() != 2) throw InvalidArgument("motzkin_straus_reference: requires a 2-graph");
  const std::size_t w = detail::clique_number(g);
  return w == 0 ? 0.0 : 1.0 - 1.0 / static_cast<double>(w);
}

// ---------------------------------------------------------------------------
// λ(G) and λ_β(G)
// ---------------------------------------------------------------------------

namespace detail {

inline bool complete_on_support(const Hypergraph& g) {
  const auto deg = g.degrees();
  std::size_t m = 0;
  for (auto d : deg) m += d > 0 ? 1 : 0;
  return m >= g.r() && g.edge_count() == binomial(m, g.r());
}

inline Certificate certify(const Hypergraph& g, const LagrangianEstimate& est) {
  if (!est.converged) return Certificate::lower_bound;
  if (g.r() == 2 && g.n() <= 64 && std::abs(est.value - motzkin_straus_reference(g)) <= 1e-9)
    return Certificate::exact_motzkin_straus;
  if (!g.empty() && complete_on_support(g)) {
    std::size_t m = 0;
    for (auto d : g.degrees()) m += d > 0 ? 1 : 0;
    const double known = static_cast<double>(falling_factorial(static_cast<std::int64_t>(m), g.r())) /
                         std::pow(static_cast<double>(m), g.r());
    if (std::abs(est.value - known) <= 1e-9) return Certificate::exact_complete;
  }
  return Certificate::lower_bound;
}

}  // namespace detail

/// Lagrangian λ(G) = max p_G over the simplex. The value is always a
/// certified lower bound; `certificate` says when it is known to be exact.
inline LagrangianEstimate lagrangian(const Hypergraph& g, const LagrangianOptions& opts = {}) {
  detail::Box box{std::vector<double>(g.n(), 0.0), std::vector<double>(g.n(), 1.0)};
  LagrangianEstimate est = detail::optimize(g, box, opts);
  est.certificate = detail::certify(g, est);
  return est;
}

struct ConstrainedEstimate {
  LagrangianEstimate estimate;  ///< optimum over max_i x_i <= β
  bool cap_binds = false;       ///< max_i x_i = β at the reported optimum
  /// Optimum with max_i x_i = β exactly. Equal to estimate.value when the
  /// cap binds; otherwise computed by pinning each vertex at β in turn.
  double equality_value = 0.0;
};

inline ConstrainedEstimate lagrangian_constrained(const Hypergraph& g, double beta,
                                                  const LagrangianOptions& opts = {}) {
  const std::size_t n = g.n();
  if (n == 0 || !(beta >= 1.0 / static_cast<double>(n) - 1e-15) || !(beta <= 1.0))
    throw InvalidArgument("lagrangian_constrained: requires 1/n <= beta <= 1");
  detail::Box box{std::vector<double>(n, 0.0), std::vector<double>(n, beta)};
  ConstrainedEstimate out;
  out.estimate = detail::optimize(g, box, opts);
  out.cap_binds = std::abs(out.estimate.weights.max() - beta) <= 1e-9;
  if (out.cap_binds) {
    out.equality_value = out.estimate.value;
    return out;
  }
  LagrangianOptions pinned_opts = opts;
  pinned_opts.restarts = std::max<std::size_t>(2, opts.restarts / std::max<std::size_t>(1, n));
  pinned_opts.on_iterate = nullptr;
  double best = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    detail::Box pin = box;
    pin.lower[i] = beta;
    best = std::max(best, detail::optimize(g, pin, pinned_opts).value);
  }
  out.equality_value = best;
  return out;
}

// ---------------------------------------------------------------------------
// Weight concentration
// ---------------------------------------------------------------------------

/// Smallest set I (heaviest vertices first, ties by label) with Σ_{i∈I} x_i >= 1-ε.
inline VertexSet stability_probe(const WeightVector& x, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("stability_probe: requires 0 < eps < 1");
  std::vector<Vertex> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] > x[b]; });
  std::vector<Vertex> picked;
  double total = 0.0;
  for (Vertex v : order) {
    if (total >= 1.0 - eps - 1e-12) break;
    picked.push_back(v);
    total += x[v];
  }
  return VertexSet(std::move(picked));
}

}  // namespace turan
