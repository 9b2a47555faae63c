#include "embax/embedders.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "embax/error.hpp"

namespace embax {

std::string embedder_name(const Embedder& e) {
  struct Visitor {
    std::string operator()(const SingleLinkage&) const { return "single-linkage"; }
    std::string operator()(const TriangleLinkage&) const { return "triangle-linkage"; }
    std::string operator()(const EigenvectorCentrality&) const { return "eigenvector"; }
    std::string operator()(const PartitionEncoder&) const { return "partition"; }
  };
  return std::visit(Visitor{}, e);
}

bool is_real_valued(const Embedder& e) { return std::holds_alternative<EigenvectorCentrality>(e); }

Embedding embed(const Embedder& e, const FeaturedNetwork& network) {
  struct Visitor {
    const FeaturedNetwork& network;
    Embedding operator()(const SingleLinkage&) const { return single_linkage(network); }
    Embedding operator()(const TriangleLinkage&) const { return triangle_linkage(network); }
    Embedding operator()(const EigenvectorCentrality& config) const {
      return eigenvector_embedding(network, config).embedding;
    }
    Embedding operator()(const PartitionEncoder& config) const {
      return encode_partition(config.partition, network.size(), config.epsilon);
    }
  };
  Embedding out = std::visit(Visitor{network}, e);
  check_embedding(out, network.size());
  return out;
}

Embedding single_linkage(const FeaturedNetwork& network) {
  Matrix phi = network.d();
  const std::size_t n = phi.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        phi(i, j) = std::min(phi(i, j), std::max(phi(i, k), phi(k, j)));
      }
    }
  }
  return Embedding::from_matrix(phi);
}

TriangleLinkageResult triangle_linkage_detailed(const FeaturedNetwork& network) {
  const std::size_t n = network.size();
  std::vector<ExtReal> phi(n * n, ExtReal(0.0));
  std::vector<std::optional<std::size_t>> witness(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (n < 3) {
        phi[i * n + j] = ExtReal::infinity();
        continue;
      }
      double best = 0.0;
      std::optional<std::size_t> best_k;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double side = std::max({network.d(i, j), network.d(i, k), network.d(j, k)});
        if (!best_k || side < best) {
          best = side;
          best_k = k;
        }
      }
      phi[i * n + j] = ExtReal(best);
      witness[i * n + j] = best_k;
    }
  }
  return {Embedding(n, std::move(phi)), std::move(witness)};
}

Embedding triangle_linkage(const FeaturedNetwork& network) { return triangle_linkage_detailed(network).embedding; }

Matrix adjacency_matrix(const FeaturedNetwork& network, const KernelSpec& kernel, AdjacencyDiagonal diagonal) {
  const std::size_t n = network.size();
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && diagonal == AdjacencyDiagonal::Zero) continue;
      a(i, j) = kappa(kernel, network.d(i, j), network.space(), network.feature(i), network.feature(j));
    }
  }
  return a;
}

EigenvectorEmbedding eigenvector_embedding(const FeaturedNetwork& network, const EigenvectorCentrality& config) {
  Matrix a = adjacency_matrix(network, config.kernel, config.diagonal);
  EigenDiagnostics diag = leading_eigenpair(a, config.solver);
  const std::size_t n = network.size();
  const double scale = std::sqrt(diag.lambda);
  Matrix phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) phi(i, j) = scale * std::abs(diag.u[i] - diag.u[j]);
    }
  }
  return {Embedding::from_matrix(phi), std::move(diag), std::move(a)};
}

Partition canonical_partition(Partition p) {
  for (auto& block : p) std::sort(block.begin(), block.end());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return p;
}

Embedding encode_partition(const Partition& partition, std::size_t n, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::NonpositiveEpsilon, "epsilon = " + std::to_string(epsilon));
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, kUnassigned);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw Error(ErrorCode::NotAPartition, "block " + std::to_string(b + 1) + " is empty");
    for (std::size_t v : partition[b]) {
      if (v >= n) throw Error(ErrorCode::NotAPartition, "node " + std::to_string(v + 1) + " out of range");
      if (block_of[v] != kUnassigned) {
        throw Error(ErrorCode::NotAPartition, "node " + std::to_string(v + 1) + " appears twice");
      }
      block_of[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (block_of[v] == kUnassigned) {
      throw Error(ErrorCode::NotAPartition, "node " + std::to_string(v + 1) + " is not covered");
    }
  }
  Matrix phi(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) phi(v, w) = block_of[v] == block_of[w] ? 0.0 : epsilon;
  }
  return Embedding::from_matrix(phi);
}

DecodedPartition decode_partition(const Embedding& e) {
  const std::size_t n = e.size();
  std::optional<double> epsilon;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      const ExtReal& x = e(v, w);
      if (x.is_infinite()) throw Error(ErrorCode::NotAPartitionEncoding, "+inf entry");
      if (x.value() == 0.0) continue;
      if (epsilon && *epsilon != x.value()) {
        throw Error(ErrorCode::NotAPartitionEncoding, "more than one nonzero value");
      }
      epsilon = x.value();
    }
  }

  // The zero relation must be an equivalence: every zero neighbour of v must
  // have exactly v's zero neighbourhood.
  Partition blocks;
  std::vector<bool> placed(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::vector<std::size_t> block;
    for (std::size_t w = v; w < n; ++w) {
      if (e(v, w) == ExtReal(0.0)) block.push_back(w);
    }
    for (std::size_t a : block) {
      if (placed[a]) throw Error(ErrorCode::NotAPartitionEncoding, "zero relation is not transitive");
      for (std::size_t b = 0; b < n; ++b) {
        const bool same = std::binary_search(block.begin(), block.end(), b);
        if ((e(a, b) == ExtReal(0.0)) != same) {
          throw Error(ErrorCode::NotAPartitionEncoding, "zero relation is not transitive");
        }
      }
      placed[a] = true;
    }
    blocks.push_back(std::move(block));
  }
  return {canonical_partition(std::move(blocks)), epsilon};
}

}  // namespace embax
