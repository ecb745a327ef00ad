#include "noisebound/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "noisebound/errors.hpp"
#include "noisebound/rng.hpp"

namespace noisebound {

SpinConfig config_from_bits(std::uint64_t bits, int n) {
  SpinConfig spins(n);
  for (int k = 0; k < n; ++k) spins[k] = ((bits >> k) & 1U) ? -1 : 1;
  return spins;
}

std::uint64_t config_to_bits(std::span<const std::int8_t> spins) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    if (spins[k] < 0) bits |= (std::uint64_t{1} << k);
  }
  return bits;
}

IsingInstance::IsingInstance(int n, std::vector<Edge> edges, std::vector<double> fields,
                             InstanceFamily family)
    : n_(n), edges_(std::move(edges)), fields_(std::move(fields)), family_(family) {
  require(n_ >= 1, "instance needs at least one spin");
  require(static_cast<int>(fields_.size()) == n_, "fields must have length n");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    require(e.i >= 0 && e.j < n_, "edge index out of range");
    require(e.i != e.j, "self-loop edges are not allowed");
    require(std::isfinite(e.coupling), "coupling must be finite");
  }
  for (double b : fields_) require(std::isfinite(b), "field must be finite");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    require(!(edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j),
            "duplicate edge (" + std::to_string(edges_[k].i) + ", " + std::to_string(edges_[k].j) + ")");
  }
  adjacency_.assign(n_, {});
  for (const auto& e : edges_) {
    adjacency_[e.i].push_back({e.j, e.coupling});
    adjacency_[e.j].push_back({e.i, e.coupling});
  }
  for (const auto& adj : adjacency_) max_degree_ = std::max(max_degree_, static_cast<int>(adj.size()));
}

bool IsingInstance::has_fields() const {
  return std::any_of(fields_.begin(), fields_.end(), [](double b) { return b != 0.0; });
}

double IsingInstance::max_abs_coupling() const {
  double m = 0.0;
  for (const auto& e : edges_) m = std::max(m, std::abs(e.coupling));
  return m;
}

double IsingInstance::energy(std::span<const std::int8_t> spins) const {
  require(static_cast<int>(spins.size()) == n_, "configuration length does not match instance size");
  double e = 0.0;
  for (const auto& edge : edges_) e -= edge.coupling * spins[edge.i] * spins[edge.j];
  for (int k = 0; k < n_; ++k) e -= fields_[k] * spins[k];
  return e;
}

double IsingInstance::local_field(std::span<const std::int8_t> spins, int site) const {
  double h = fields_[site];
  for (const auto& nb : adjacency_[site]) h += nb.coupling * spins[nb.site];
  return h;
}

IsingInstance generate_regular(int n, int degree, int sign, std::uint64_t seed) {
  require(n >= 1 && degree >= 0, "regular graph needs n >= 1 and degree >= 0");
  require(degree < n, "degree must be smaller than n");
  require((static_cast<long>(n) * degree) % 2 == 0, "n * degree must be even");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");

  Rng rng(seed);
  const int points = n * degree;
  std::vector<int> stubs(points);
  constexpr int max_attempts = 5'000'000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::iota(stubs.begin(), stubs.end(), 0);
    for (int k = points - 1; k > 0; --k) {
      const auto r = static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1));
      std::swap(stubs[k], stubs[r]);
    }
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (int k = 0; k < points && simple; k += 2) {
      int u = stubs[k] / degree;
      int v = stubs[k + 1] / degree;
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      simple = seen.emplace(u, v).second;
    }
    if (!simple) continue;
    std::vector<Edge> edges;
    edges.reserve(seen.size());
    for (const auto& [u, v] : seen) edges.push_back({u, v, static_cast<double>(sign)});
    return IsingInstance(n, std::move(edges), std::vector<double>(n, 0.0), InstanceFamily::regular);
  }
  throw ComputationError("pairing model failed to produce a simple graph");
}

IsingInstance generate_sk(int n, std::uint64_t seed) {
  require(n >= 2, "SK instance needs n >= 2");
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, rng.normal() * scale});
  }
  return IsingInstance(n, std::move(edges), std::vector<double>(n, 0.0),
                       InstanceFamily::sherrington_kirkpatrick);
}

double spectral_norm(const IsingInstance& instance) {
  const int n = instance.size();
  if (instance.edges().empty()) return 0.0;

  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& e : instance.edges()) {
    a[static_cast<std::size_t>(e.i) * n + e.j] = e.coupling;
    a[static_cast<std::size_t>(e.j) * n + e.i] = e.coupling;
  }
  auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = &a[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
  };
  auto normalize = [](std::vector<double>& x) {
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
    return norm;
  };

  Rng rng(0x5eed5eed5eedULL);
  std::vector<double> x(n), y(n), z(n);
  for (double& v : x) v = 2.0 * rng.uniform() - 1.0;
  normalize(x);

  // Rayleigh quotient of A^2 is |Ax|^2 for unit x.
  double previous = 0.0;
  double rayleigh = 0.0;
  constexpr int max_iterations = 200'000;
  for (int it = 0; it < max_iterations; ++it) {
    multiply(x, y);
    rayleigh = 0.0;
    for (double v : y) rayleigh += v * v;
    if (rayleigh == 0.0) return 0.0;
    multiply(y, z);
    normalize(z);
    x.swap(z);
    if (it > 0 && std::abs(rayleigh - previous) <= 1e-9 * rayleigh) break;
    previous = rayleigh;
  }
  return std::sqrt(rayleigh);
}

}  // namespace noisebound
