#include "textknn/knn.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

#include "textknn/errors.hpp"

namespace textknn {

void TrainedModel::validate() const {
  if (vectors.empty()) throw ConfigError("model has no training vectors");
  if (vectors.size() != labels.size() || vectors.size() != doc_ids.size()) {
    throw ConfigError("model vectors/labels/ids must be parallel");
  }
  if (distribution.categories != categories) {
    throw ConfigError("model distribution categories mismatch");
  }
  std::vector<std::int64_t> counts(categories.size(), 0);
  for (const auto label : labels) {
    if (label >= categories.size()) throw ConfigError("label index out of range");
    ++counts[label];
  }
  if (counts != distribution.counts) {
    throw ConfigError("model distribution does not match labels");
  }
}

Strategy strategy_by_name(const std::string& name) {
  if (name == "majority") return Strategy::majority;
  if (name == "weighted") return Strategy::weighted;
  if (name == "topn") return Strategy::per_class_top_n;
  throw ConfigError("unknown strategy: " + name);
}

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::majority: return "majority";
    case Strategy::weighted: return "weighted";
    case Strategy::per_class_top_n: return "topn";
  }
  throw ConfigError("unreachable strategy");
}

TrainedModel train(const Corpus& corpus, const Vocabulary& vocab) {
  if (corpus.empty()) throw ConfigError("cannot train on an empty corpus");
  TrainedModel model;
  model.categories = corpus.categories();
  model.distribution = class_distribution(corpus);  // also rejects unlabeled docs

  const auto& docs = corpus.documents();
  model.doc_ids.reserve(docs.size());
  model.labels.reserve(docs.size());
  model.vectors.resize(docs.size());
  for (const auto& doc : docs) {
    model.doc_ids.push_back(doc.id);
    const auto it =
        std::lower_bound(model.categories.begin(), model.categories.end(), *doc.label);
    model.labels.push_back(static_cast<std::uint32_t>(it - model.categories.begin()));
  }
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    model.vectors[i] = vectorize(docs[i], vocab);
  }
  return model;
}

namespace {

struct Candidate {
  double similarity;
  std::size_t index;
};

// similarity descending, then training index ascending: a total order,
// ties never left unresolved
inline bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.similarity != b.similarity) return a.similarity > b.similarity;
  return a.index < b.index;
}

std::int64_t clamp_k(const TrainedModel& model, std::int64_t k,
                     std::optional<std::size_t> exclude) {
  if (k < 1) throw ConfigError("k must be >= 1");
  const auto pool = static_cast<std::int64_t>(model.size()) - (exclude ? 1 : 0);
  if (k > pool) {
    std::cerr << "warning: k=" << k << " exceeds " << pool
              << " available training documents; clamping\n";
    return pool;
  }
  return k;
}

std::vector<Neighbor> take_top(const TrainedModel& model, std::vector<Candidate> candidates,
                               std::int64_t k) {
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end(),
                    ranks_before);
  std::vector<Neighbor> neighbors;
  neighbors.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    neighbors.push_back({candidates[i].index, candidates[i].similarity,
                         model.labels[candidates[i].index]});
  }
  return neighbors;
}

}  // namespace

std::vector<Neighbor> nearest_neighbors(const TrainedModel& model, const SparseVector& query,
                                        std::int64_t k, std::optional<std::size_t> exclude) {
  const std::int64_t k_eff = clamp_k(model, k, exclude);
  const std::size_t n = model.size();
  std::vector<double> sims(n);
  // Each similarity is independent, so the scan parallelizes without
  // changing any result bit.
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    sims[i] = cosine(query, model.vectors[i]);
  }
  std::vector<Candidate> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (exclude && *exclude == i) continue;
    candidates.push_back({sims[i], i});
  }
  return take_top(model, std::move(candidates), k_eff);
}

std::vector<Neighbor> nearest_neighbors_serial(const TrainedModel& model,
                                               const SparseVector& query, std::int64_t k,
                                               std::optional<std::size_t> exclude) {
  const std::int64_t k_eff = clamp_k(model, k, exclude);
  std::vector<Candidate> candidates;
  candidates.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (exclude && *exclude == i) continue;
    candidates.push_back({cosine(query, model.vectors[i]), i});
  }
  std::sort(candidates.begin(), candidates.end(), ranks_before);
  candidates.resize(std::min<std::size_t>(static_cast<std::size_t>(k_eff), candidates.size()));
  std::vector<Neighbor> neighbors;
  neighbors.reserve(candidates.size());
  for (const auto& c : candidates) {
    neighbors.push_back({c.index, c.similarity, model.labels[c.index]});
  }
  return neighbors;
}

std::int64_t per_class_neighbor_count(std::int64_t k, std::int64_t class_size,
                                      std::int64_t max_class_size) {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (class_size < 1 || class_size > max_class_size) {
    throw ConfigError("class_size must be in [1, max_class_size]");
  }
  return (k * class_size + max_class_size - 1) / max_class_size;
}

std::vector<double> score_majority(std::span<const Neighbor> neighbors,
                                   std::size_t category_count) {
  std::vector<double> scores(category_count, 0.0);
  for (const auto& nb : neighbors) scores[nb.label] += 1.0;
  return scores;
}

std::vector<double> score_weighted(std::span<const Neighbor> neighbors,
                                   std::size_t category_count) {
  std::vector<double> scores(category_count, 0.0);
  for (const auto& nb : neighbors) scores[nb.label] += nb.similarity;
  return scores;
}

std::vector<double> score_per_class_top_n(std::span<const Neighbor> neighbors,
                                          const ClassDistribution& distribution,
                                          std::int64_t k) {
  const std::size_t category_count = distribution.categories.size();
  std::vector<double> scores(category_count, 0.0);
  if (neighbors.empty()) return scores;
  // prefix_sum[j] = total similarity of the first j neighbors
  std::vector<double> prefix_sum(neighbors.size() + 1, 0.0);
  for (std::size_t j = 0; j < neighbors.size(); ++j) {
    prefix_sum[j + 1] = prefix_sum[j] + neighbors[j].similarity;
  }
  for (std::size_t c = 0; c < category_count; ++c) {
    const std::int64_t class_size = distribution.counts[c];
    if (class_size == 0) continue;  // class absent from training, no budget defined
    const auto n = static_cast<std::size_t>(
        per_class_neighbor_count(k, class_size, distribution.max_count));
    const std::size_t prefix = std::min(n, neighbors.size());
    double class_sum = 0.0;
    for (std::size_t j = 0; j < prefix; ++j) {
      if (neighbors[j].label == c) class_sum += neighbors[j].similarity;
    }
    const double total = prefix_sum[prefix];
    scores[c] = total > 0.0 ? class_sum / total : 0.0;
  }
  return scores;
}

Decision decide(const TrainedModel& model, std::vector<Neighbor> neighbors, Strategy strategy) {
  const auto k_eff = static_cast<std::int64_t>(neighbors.size());
  Decision decision;
  switch (strategy) {
    case Strategy::majority:
      decision.scores = score_majority(neighbors, model.categories.size());
      break;
    case Strategy::weighted:
      decision.scores = score_weighted(neighbors, model.categories.size());
      break;
    case Strategy::per_class_top_n:
      decision.scores = score_per_class_top_n(neighbors, model.distribution, k_eff);
      break;
  }
  // The list is ranked, so the first similarity is the maximum.
  decision.degenerate = neighbors.empty() || neighbors.front().similarity == 0.0;
  if (decision.degenerate) {
    decision.predicted_index = model.distribution.largest_class();
  } else {
    std::size_t best = 0;
    for (std::size_t c = 1; c < decision.scores.size(); ++c) {
      if (decision.scores[c] > decision.scores[best]) best = c;  // ties keep canonical order
    }
    decision.predicted_index = best;
  }
  decision.predicted = model.categories[decision.predicted_index];
  decision.neighbors = std::move(neighbors);
  return decision;
}

Decision classify(const TrainedModel& model, const SparseVector& query, std::int64_t k,
                  Strategy strategy, std::optional<std::size_t> exclude) {
  return decide(model, nearest_neighbors(model, query, k, exclude), strategy);
}

std::vector<Decision> classify_batch(const TrainedModel& model,
                                     std::span<const SparseVector> queries, std::int64_t k,
                                     Strategy strategy) {
  const std::int64_t k_eff = clamp_k(model, k, std::nullopt);  // warn once, not per query
  std::vector<Decision> decisions(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < queries.size(); ++i) {
    decisions[i] = classify(model, queries[i], k_eff, strategy);
  }
  return decisions;
}

}  // namespace textknn
