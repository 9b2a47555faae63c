#pragma once

// The node embedding procedures: single-linkage, triangle-linkage,
// eigenvector centrality and the partition encoder, behind one Embedder.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "embax/netcore.hpp"
#include "embax/spectral.hpp"

namespace embax {

using Partition = std::vector<std::vector<std::size_t>>;

enum class AdjacencyDiagonal {
  Zero,   // A_ii = 0
  Kappa,  // A_ii = kappa(0; F(i), F(i))
};

struct SingleLinkage {};
struct TriangleLinkage {};
struct EigenvectorCentrality {
  KernelSpec kernel;
  PowerIterSpec solver;
  AdjacencyDiagonal diagonal = AdjacencyDiagonal::Zero;
};
/// Ignores the network apart from its size.
struct PartitionEncoder {
  Partition partition;
  double epsilon = 1.0;
};

using Embedder = std::variant<SingleLinkage, TriangleLinkage, EigenvectorCentrality, PartitionEncoder>;

/// "single-linkage", "triangle-linkage", "eigenvector", "partition".
std::string embedder_name(const Embedder& e);

/// True when outputs carry floating-point noise and must be compared with a
/// tolerance rather than exactly.
bool is_real_valued(const Embedder& e);

/// Result always lives on the network's node set (checked).
Embedding embed(const Embedder& e, const FeaturedNetwork& network);

/// phi(i, j) = min over paths from i to j of the largest hop, by a (min, max)
/// Floyd-Warshall closure. Features are ignored. The result is an ultrametric.
Embedding single_linkage(const FeaturedNetwork& network);

struct TriangleLinkageResult {
  Embedding embedding;
  /// Row-major n*n; the smallest third node attaining the minimum, empty on
  /// the diagonal and for networks with fewer than three nodes.
  std::vector<std::optional<std::size_t>> witness;
};

/// phi(i, j) = min over k not in {i, j} of max{d(i,j), d(i,k), d(j,k)};
/// +inf off the diagonal when n < 3.
TriangleLinkageResult triangle_linkage_detailed(const FeaturedNetwork& network);
Embedding triangle_linkage(const FeaturedNetwork& network);

/// A_ij = kappa(d(i,j); F(i), F(j)) off the diagonal.
Matrix adjacency_matrix(const FeaturedNetwork& network, const KernelSpec& kernel, AdjacencyDiagonal diagonal);

struct EigenvectorEmbedding {
  Embedding embedding;
  EigenDiagnostics diagnostics;
  Matrix adjacency;
};

/// phi(i, j) = sqrt(lambda) |u_i - u_j| for the leading eigenpair of the
/// kernel adjacency matrix.
EigenvectorEmbedding eigenvector_embedding(const FeaturedNetwork& network, const EigenvectorCentrality& config);

/// phi(v, w) = 0 when v and w share a block, epsilon otherwise.
/// Errors: NotAPartition, NonpositiveEpsilon.
Embedding encode_partition(const Partition& partition, std::size_t n, double epsilon);

struct DecodedPartition {
  Partition partition;  // canonical order
  /// Absent when every pair shares a block, since then phi carries no epsilon.
  std::optional<double> epsilon;
};

/// Inverse of encode_partition. Throws NotAPartitionEncoding when phi takes
/// more than one nonzero value, takes +inf, or its zero relation is not
/// transitive.
DecodedPartition decode_partition(const Embedding& e);

/// Blocks sorted internally and ordered by their smallest node.
Partition canonical_partition(Partition p);

}  // namespace embax
