#pragma once

// Classical Ising problem instances
//
//   H = - sum_{(i,j)} a_ij s_i s_j - sum_i b_i s_i,   s in {-1,+1}^n
//
// Spin s_k = +1 corresponds to bit k = 0 (the |0> state, Z eigenvalue +1),
// so configuration index x has s_k = 1 - 2 * ((x >> k) & 1).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noisebound {

using SpinConfig = std::vector<std::int8_t>;

SpinConfig config_from_bits(std::uint64_t bits, int n);
std::uint64_t config_to_bits(std::span<const std::int8_t> spins);

struct Edge {
  int i = 0;
  int j = 0;
  double coupling = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int site = 0;
  double coupling = 0.0;
};

// Instances carry the family they were drawn from because some Gibbs-sampling
// certificates only apply to a specific ensemble. The family is not part of
// the JSON schema.
enum class InstanceFamily { generic, regular, sherrington_kirkpatrick };

class IsingInstance {
 public:
  IsingInstance() = default;

  // Validates indices and rejects duplicate edges. Edges with i > j are
  // flipped; the stored edge list is sorted lexicographically by (i, j).
  IsingInstance(int n, std::vector<Edge> edges, std::vector<double> fields,
                InstanceFamily family = InstanceFamily::generic);

  int size() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const double> fields() const { return fields_; }
  std::span<const Neighbor> neighbors(int site) const { return adjacency_[site]; }
  InstanceFamily family() const { return family_; }

  int degree(int site) const { return static_cast<int>(adjacency_[site].size()); }
  int max_degree() const { return max_degree_; }
  bool has_fields() const;
  double max_abs_coupling() const;

  double energy(std::span<const std::int8_t> spins) const;

  // sum_j a_kj s_j + b_k
  double local_field(std::span<const std::int8_t> spins, int site) const;

  // energy(flip site) - energy(spins) = 2 s_k (sum_j a_kj s_j + b_k)
  double flip_delta(std::span<const std::int8_t> spins, int site) const {
    return 2.0 * spins[site] * local_field(spins, site);
  }

  friend bool operator==(const IsingInstance& a, const IsingInstance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.fields_ == b.fields_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> fields_;
  std::vector<std::vector<Neighbor>> adjacency_;
  int max_degree_ = 0;
  InstanceFamily family_ = InstanceFamily::generic;
};

// Uniform simple degree-regular graph by the pairing model with full
// restart on loops or multi-edges. Every coupling equals `sign`, fields 0.
IsingInstance generate_regular(int n, int degree, int sign, std::uint64_t seed);

// Sherrington-Kirkpatrick: complete graph, a_ij ~ N(0, 1/n), fields 0.
IsingInstance generate_sk(int n, std::uint64_t seed);

// Largest absolute eigenvalue of the zero-diagonal coupling matrix A,
// by power iteration on A^2 (relative tolerance 1e-9, fixed start vector).
double spectral_norm(const IsingInstance& instance);

// {"n": int, "edges": [[i, j, a], ...], "fields": [b_0, ...]}
std::string to_json(const IsingInstance& instance);
IsingInstance instance_from_json(std::string_view text);
IsingInstance load_instance(const std::string& path);
void save_instance(const IsingInstance& instance, const std::string& path);

}  // namespace noisebound
