#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "textknn/corpus.hpp"
#include "textknn/vectorizer.hpp"

namespace textknn {

/// Frozen training state: one vector per training document plus the class
/// distribution that drives the per-class neighbor budgets.
struct TrainedModel {
  std::vector<std::string> doc_ids;
  std::vector<SparseVector> vectors;
  std::vector<std::uint32_t> labels;  // indices into categories, parallel to vectors
  std::vector<std::string> categories;  // canonical (lexicographic) class order
  ClassDistribution distribution;

  std::size_t size() const { return vectors.size(); }
  const std::string& label_name(std::size_t train_index) const {
    return categories[labels[train_index]];
  }
  /// Throws unless vectors/labels/distribution are mutually consistent.
  void validate() const;
};

/// One entry of a ranked neighbor list. Lists are totally ordered by
/// similarity descending, then train_index ascending.
struct Neighbor {
  std::size_t train_index;
  double similarity;
  std::uint32_t label;  // category index

  bool operator==(const Neighbor&) const = default;
};

/// Decision rule applied to the ranked k-neighbor list.
enum class Strategy {
  majority,           // count of neighbors per class
  weighted,           // sum of similarities per class
  per_class_top_n,    // similarity share within a class-size-scaled prefix
};

Strategy strategy_by_name(const std::string& name);
const char* strategy_name(Strategy strategy);

/// Classification outcome. `scores` is aligned with the model categories.
/// A decision is degenerate when the query vector is empty or every
/// retrieved similarity is zero; the prediction then falls back to the
/// largest training class.
struct Decision {
  std::string predicted;
  std::size_t predicted_index = 0;
  std::vector<double> scores;
  std::vector<Neighbor> neighbors;
  bool degenerate = false;
};

/// Vectorizes and stores the corpus; kNN has no other training step.
TrainedModel train(const Corpus& corpus, const Vocabulary& vocab);

/// Exact k-nearest-neighbor search: the min(k, candidates) most similar
/// training vectors under the total order. The similarity scan runs in
/// parallel; the result is identical to the serial reference. `exclude`
/// removes one training index from the candidate pool.
std::vector<Neighbor> nearest_neighbors(const TrainedModel& model, const SparseVector& query,
                                        std::int64_t k,
                                        std::optional<std::size_t> exclude = std::nullopt);

/// Serial reference: score every candidate, full sort, truncate. Kept for
/// tests and benchmarks against the parallel path.
std::vector<Neighbor> nearest_neighbors_serial(const TrainedModel& model,
                                               const SparseVector& query, std::int64_t k,
                                               std::optional<std::size_t> exclude = std::nullopt);

/// Per-class neighbor budget: ceil(k * class_size / max_class_size).
/// Always in [1, k]; the largest class uses all k neighbors.
std::int64_t per_class_neighbor_count(std::int64_t k, std::int64_t class_size,
                                      std::int64_t max_class_size);

/// score(c) = number of neighbors labeled c.
std::vector<double> score_majority(std::span<const Neighbor> neighbors,
                                   std::size_t category_count);

/// score(c) = sum of similarities of neighbors labeled c, accumulated in
/// rank order.
std::vector<double> score_weighted(std::span<const Neighbor> neighbors,
                                   std::size_t category_count);

/// score(c) = sum of class-c similarities within the top-n prefix of the
/// ranked list, divided by the prefix similarity total, with n scaled by
/// class size. Classes absent from the training set score 0.
std::vector<double> score_per_class_top_n(std::span<const Neighbor> neighbors,
                                          const ClassDistribution& distribution, std::int64_t k);

/// Builds a Decision from an already-ranked neighbor list. The effective k
/// is the list length.
Decision decide(const TrainedModel& model, std::vector<Neighbor> neighbors, Strategy strategy);

/// nearest_neighbors + the selected scorer + argmax with canonical-order
/// tie-break. k > |train| is clamped with a warning.
Decision classify(const TrainedModel& model, const SparseVector& query, std::int64_t k,
                  Strategy strategy, std::optional<std::size_t> exclude = std::nullopt);

/// Classifies a batch of queries in parallel; results are in input order
/// and identical to repeated classify() calls.
std::vector<Decision> classify_batch(const TrainedModel& model,
                                     std::span<const SparseVector> queries, std::int64_t k,
                                     Strategy strategy);

}  // namespace textknn
