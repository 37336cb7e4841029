#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dckron/network.hpp"

namespace dckron::testing {

/// Random simple digraph on n vertices with edge probability p. Weights are
/// integers in [1, 10] when `integer_weights`, uniform in [0.5, 5] otherwise.
inline Network random_network(std::mt19937& rng, std::size_t n, double p, bool integer_weights = true) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> iw(1, 10);
  std::uniform_real_distribution<double> rw(0.5, 5.0);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), {}});
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng)) es.push_back({vs[i].label, vs[j].label, integer_weights ? iw(rng) : rw(rng)});
  std::shuffle(es.begin(), es.end(), rng);
  return Network("random", std::move(vs), es);
}

/// Digraph on n vertices whose edge set is the bit pattern `mask` over the
/// n(n-1) ordered pairs, with random weights.
inline Network network_from_mask(std::mt19937& rng, std::size_t n, unsigned long mask) {
  std::uniform_real_distribution<double> rw(0.5, 5.0);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({std::to_string(i + 1), {}});
  std::vector<EdgeSpec> es;
  unsigned bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (mask & (1ul << bit)) es.push_back({vs[i].label, vs[j].label, rw(rng)});
      ++bit;
    }
  }
  return Network("mask", std::move(vs), es);
}

}  // namespace dckron::testing
