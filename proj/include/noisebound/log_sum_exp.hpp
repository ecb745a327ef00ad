#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace noisebound {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }
  void scale(double factor) {
    sum *= factor;
    compensation *= factor;
  }
  double value() const { return sum + compensation; }
};

// Streaming log(sum_k e^{x_k}) with a running maximum, plus the e^{x_k}-weighted
// sum of a companion value (used for thermal averages).
class StreamingLogSumExp {
 public:
  void add(double exponent, double value) {
    if (exponent > max_) {
      if (max_ != -std::numeric_limits<double>::infinity()) {
        const double factor = std::exp(max_ - exponent);
        weight_.scale(factor);
        weighted_.scale(factor);
      }
      max_ = exponent;
    }
    const double w = std::exp(exponent - max_);
    weight_.add(w);
    weighted_.add(w * value);
  }

  void merge(const StreamingLogSumExp& other) {
    if (other.max_ == -std::numeric_limits<double>::infinity()) return;
    if (other.max_ > max_) {
      StreamingLogSumExp copy = other;
      copy.absorb(*this);
      *this = copy;
    } else {
      absorb(other);
    }
  }

  double log_sum() const { return max_ + std::log(weight_.value()); }
  double weighted_mean() const { return weighted_.value() / weight_.value(); }
  double max_exponent() const { return max_; }

 private:
  // Requires other.max_ <= max_.
  void absorb(const StreamingLogSumExp& other) {
    if (other.max_ == -std::numeric_limits<double>::infinity()) return;
    const double factor = std::exp(other.max_ - max_);
    weight_.add(other.weight_.sum * factor);
    weight_.add(other.weight_.compensation * factor);
    weighted_.add(other.weighted_.sum * factor);
    weighted_.add(other.weighted_.compensation * factor);
  }

  double max_ = -std::numeric_limits<double>::infinity();
  CompensatedSum weight_;
  CompensatedSum weighted_;
};

// Pairwise merge in a fixed tree shape: (0,1), (2,3), ... then recurse.
// The result depends only on the number of partials, never on scheduling.
template <class T, class Merge>
T tree_reduce(std::vector<T> partials, Merge merge) {
  while (partials.size() > 1) {
    std::vector<T> next;
    next.reserve((partials.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < partials.size(); k += 2) {
      T a = partials[k];
      merge(a, partials[k + 1]);
      next.push_back(a);
    }
    if (partials.size() % 2 == 1) next.push_back(partials.back());
    partials.swap(next);
  }
  return partials.front();
}

}  // namespace noisebound
