#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "textknn/corpus.hpp"
#include "textknn/knn.hpp"

namespace textknn {

/// k-sweep configuration: which k values and decision rules to evaluate
/// on a seeded train/test fold pair.
struct SweepConfig {
  std::vector<std::int64_t> k_values = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
  std::vector<Strategy> strategies = {Strategy::weighted, Strategy::per_class_top_n};
  std::uint64_t seed = 42;
  int folds = 10;
  int train_fold = 0;
  int test_fold = 1;

  void validate() const;  // throws ConfigError
};

struct SweepRow {
  Strategy strategy;
  std::int64_t k;
  double micro = 0.0;
  double macro_p = 0.0;
  double macro_r = 0.0;
  double macro_f1 = 0.0;
};

struct PerClassRow {
  Strategy strategy;
  std::int64_t k;
  std::string category;
  double f1 = 0.0;
};

/// Column means and sample standard deviations over the k values.
struct StrategySummary {
  Strategy strategy;
  SweepRow mean;
  SweepRow stddev;
};

struct SweepReport {
  std::vector<std::string> categories;
  std::vector<SweepRow> rows;            // |strategies| x |k_values|
  std::vector<PerClassRow> per_class;    // rows x |categories|
  std::vector<StrategySummary> summaries;
};

/// Splits the corpus, trains on train_fold, classifies test_fold for every
/// (strategy, k) cell, and aggregates metrics. Deterministic in
/// (corpus, config); test documents are evaluated in parallel.
SweepReport run_sweep(const Corpus& corpus, const SweepConfig& config);

/// CSV mirroring the sweep table: percent columns with two decimals plus
/// full-precision raw columns, with Avg. and STDev rows appended per
/// strategy.
void write_sweep_csv(const SweepReport& report, std::ostream& out);

/// Per-(strategy, k, class) F1 CSV, the data behind per-class curves.
void write_per_class_f1_csv(const SweepReport& report, std::ostream& out);

}  // namespace textknn
