#ifndef TIGHTLAT_EMBEDDING_HPP_
#define TIGHTLAT_EMBEDDING_HPP_

#include <string>
#include <vector>

#include "tightlat/matroid.hpp"
#include "tightlat/modeling.hpp"
#include "tightlat/partition.hpp"

namespace tightlat {

// Always recomputed from scratch, never assumed. An embedding is tight when
// all three hold; it is then automatically injective.
struct EmbeddingCertificate {
  bool is_homomorphism = false;
  bool is_cover_preserving = false;
  bool maps_bottom_to_bottom = false;
  bool tight() const {
    return is_homomorphism && is_cover_preserving && maps_bottom_to_bottom;
  }
};

struct PartitionEmbedding {
  Lattice lattice;
  int n = 0;
  std::vector<Partition> map;  // indexed by lattice element
  EmbeddingCertificate certificate;
};

EmbeddingCertificate certify_partition_embedding(const Lattice& l, int n,
                                                 const std::vector<Partition>& map);

struct LatticeModelCheck {
  bool ok = false;
  std::string failed_condition;  // empty when ok
};

// A carrier lattice-models L via the bijection phi from the nonzero join
// irreducibles J(L) onto the edge labels (or matroid ground). Conditions:
// the carrier rank equals the lattice height, and for a graph the preimage
// X of every chordless circuit satisfies q <= join(X minus q) for each q in
// X; for a binary matroid instead the image of every J(a) must be closed.
LatticeModelCheck check_lattice_model(const Lattice& l, const LabeledGraph& g,
                                      const PointToElement& phi);
// Edge labels are the join irreducibles themselves.
LatticeModelCheck check_lattice_model(const Lattice& l, const LabeledGraph& g);
LatticeModelCheck check_lattice_model(const Lattice& l, const BinaryMatroid& m,
                                      const PointToElement& phi);

// The map a -> comp(phi(J(a))) over the vertex set, with vertex v named
// v+1 in the partition ground set. Requires the model check to pass and the
// graph to be connected; the vertex count is then height(L)+1 and the
// certificate verifies in full.
PartitionEmbedding build_partition_embedding(const Lattice& l, const LabeledGraph& g,
                                             const PointToElement& phi);
PartitionEmbedding build_partition_embedding(const Lattice& l, const LabeledGraph& g);

struct ExtractedModel {
  LabeledGraph raw;    // one edge per join irreducible, on the full ground set
  LabeledGraph glued;  // components identified at one vertex, height(L)+1 left
};

// Converse direction: from a certified tight map into Part(n), pick for
// each join irreducible p the least ground pair joined at p but not at its
// lower cover. Edge labels are the join irreducibles; the glued graph
// passes check_lattice_model again.
ExtractedModel extract_model_from_embedding(const Lattice& l, int n,
                                            const std::vector<Partition>& map);

struct GeometricEmbedding {
  BinaryMatroid matroid;
  std::vector<std::vector<int>> flat_sets;  // flat id -> closed subset, sorted
  Lattice flats;                            // lattice of flats over those ids
  std::vector<int> map;                     // lattice element -> flat id
  EmbeddingCertificate certificate;
};

// The map a -> closure of phi(J(a)), landing in the lattice of flats of the
// matroid. The model check makes every image closed, so the images are the
// sets phi(J(a)) themselves.
GeometricEmbedding build_geometric_embedding(const Lattice& l, const BinaryMatroid& m,
                                             const PointToElement& phi);

// Ideal-style embedding of a distributive lattice into Part(|J|+1): element
// a becomes the block J(a) plus a shared anchor point, all else singletons.
// Without the anchor the blocks J(a) collide at singletons.
PartitionEmbedding distributive_embedding(const Lattice& l);

// Juxtaposition over the factors of the maximal congruences: factor i's
// embedding lands on its own ground block, shifted past the earlier ones.
// factor_embeddings[i] must be a certified embedding of
// maximal_congruences(l).factors[i].
PartitionEmbedding subdirect_embedding(const Lattice& l,
                                       const std::vector<PartitionEmbedding>& factor_embeddings);

struct BruteForceResult {
  bool found = false;
  LabeledGraph graph;  // model with join-irreducible edge labels
  PartitionEmbedding embedding;
  long long graphs_tried = 0;      // connected representatives examined
  long long labelings_tried = 0;   // bijections examined over all graphs
};

// Exhaustive search for a tight embedding of l into Part(n). Any tight
// embedding into any Part(m) comes from a connected model graph on
// height+1 vertices with one edge per join irreducible, so those graphs are
// enumerated (canonical representatives, labelings modulo automorphisms)
// and an exhausted search is a proof that no Part(m) works. n below
// height+1 returns none immediately; n above it pads with singletons.
BruteForceResult brute_force_embedding_search(const Lattice& l, int n,
                                              long long work_bound = 20000000);

struct DirectSearchResult {
  bool found = false;
  PartitionEmbedding embedding;
  long long nodes = 0;
};

// Secondary oracle: backtracking assignment of partitions to lattice
// elements in height order, pruning on order, cover and meet/join
// consistency. Independent of the graph search; n <= 5.
DirectSearchResult direct_embedding_search(const Lattice& l, int n,
                                           long long node_bound = 20000000);

struct PipelineReport {
  bool embedded = false;
  PartitionEmbedding embedding;  // meaningful when embedded
  LabeledGraph model;            // connected modeling graph behind it
  std::string branch;  // "ump", "augmented-type1" or "glue-search"
  std::string reason;  // set when not embedded
};

// End-to-end pipeline for thin lattices: extract the MoPLS, build a
// circuit-friendly rank-model (standard graph if the MoPLS is a UMP, else
// replay of a type 1 augmentation history, else exhaustive gluing), glue it
// connected, run the lattice-model check and construct the embedding. A
// circuit-friendly rank-model failing the lattice-model check would break
// the design assumption behind this pipeline, so that aborts loudly instead
// of reporting a polite negative.
PipelineReport pipeline_embed_thin(const Lattice& l);

}  // namespace tightlat

#endif  // TIGHTLAT_EMBEDDING_HPP_
