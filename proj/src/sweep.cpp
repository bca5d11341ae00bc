#include "textknn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "textknn/errors.hpp"
#include "textknn/eval.hpp"
#include "textknn/vectorizer.hpp"

namespace textknn {

void SweepConfig::validate() const {
  if (k_values.empty()) throw ConfigError("k_values must not be empty");
  for (const auto k : k_values) {
    if (k < 1) throw ConfigError("k values must be >= 1");
  }
  if (strategies.empty()) throw ConfigError("strategies must not be empty");
  if (folds < 2) throw ConfigError("folds must be >= 2");
  if (train_fold < 0 || train_fold >= folds || test_fold < 0 || test_fold >= folds) {
    throw ConfigError("fold indices must be in [0, folds)");
  }
  if (train_fold == test_fold) throw ConfigError("train_fold must differ from test_fold");
}

SweepReport run_sweep(const Corpus& corpus, const SweepConfig& config) {
  config.validate();
  const auto folds = split_random_even(corpus, config.folds, config.seed);
  const Corpus& train_corpus = folds[static_cast<std::size_t>(config.train_fold)];
  const Corpus& test_corpus = folds[static_cast<std::size_t>(config.test_fold)];

  const Vocabulary vocab = fit_vocabulary(train_corpus);
  const TrainedModel model = train(train_corpus, vocab);

  const auto& test_docs = test_corpus.documents();
  std::vector<SparseVector> queries(test_docs.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < test_docs.size(); ++i) {
    queries[i] = vectorize(test_docs[i], vocab);
  }

  // One ranked list per test document at the largest k; every smaller k is
  // a prefix of it, so each cell reuses the same lists.
  const std::int64_t max_k = *std::max_element(config.k_values.begin(), config.k_values.end());
  const auto k_cap = std::min<std::int64_t>(max_k, static_cast<std::int64_t>(model.size()));
  if (k_cap < max_k) {
    std::cerr << "warning: training fold has " << model.size()
              << " documents; k values above that are clamped\n";
  }
  std::vector<std::vector<Neighbor>> ranked(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < queries.size(); ++i) {
    ranked[i] = nearest_neighbors_serial(model, queries[i], k_cap);
  }

  std::vector<std::pair<std::string, std::string>> gold;
  gold.reserve(test_docs.size());
  for (const auto& doc : test_docs) {
    if (!doc.label) throw ConfigError("unlabeled test document: " + doc.id);
    gold.emplace_back(doc.id, *doc.label);
  }

  SweepReport report;
  report.categories = corpus.categories();
  for (const auto strategy : config.strategies) {
    for (const auto k : config.k_values) {
      const auto k_eff = static_cast<std::size_t>(std::min(k, k_cap));
      std::vector<std::pair<std::string, std::string>> predictions;
      predictions.reserve(test_docs.size());
      for (std::size_t i = 0; i < queries.size(); ++i) {
        std::vector<Neighbor> prefix(ranked[i].begin(),
                                     ranked[i].begin() +
                                         std::min(k_eff, ranked[i].size()));
        const Decision decision = decide(model, std::move(prefix), strategy);
        predictions.emplace_back(test_docs[i].id, decision.predicted);
      }
      const ConfusionCounts counts = confusion(predictions, gold, report.categories);
      const MetricsReport metrics = metrics_report(counts);
      report.rows.push_back({strategy, k, metrics.micro, metrics.macro.precision,
                             metrics.macro.recall, metrics.macro.f1});
      for (std::size_t c = 0; c < report.categories.size(); ++c) {
        report.per_class.push_back(
            {strategy, k, report.categories[c], metrics.per_class[c].f1});
      }
    }
  }

  // Column means and sample (n-1) standard deviations per strategy.
  for (const auto strategy : config.strategies) {
    std::vector<const SweepRow*> rows;
    for (const auto& row : report.rows) {
      if (row.strategy == strategy) rows.push_back(&row);
    }
    const auto n = static_cast<double>(rows.size());
    const auto column_stats = [&](auto field) {
      double mean = 0.0;
      for (const auto* row : rows) mean += row->*field;
      mean /= n;
      double var = 0.0;
      for (const auto* row : rows) {
        const double d = row->*field - mean;
        var += d * d;
      }
      const double stddev = rows.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
      return std::pair{mean, stddev};
    };
    StrategySummary summary;
    summary.strategy = strategy;
    summary.mean.strategy = summary.stddev.strategy = strategy;
    std::tie(summary.mean.micro, summary.stddev.micro) = column_stats(&SweepRow::micro);
    std::tie(summary.mean.macro_p, summary.stddev.macro_p) = column_stats(&SweepRow::macro_p);
    std::tie(summary.mean.macro_r, summary.stddev.macro_r) = column_stats(&SweepRow::macro_r);
    std::tie(summary.mean.macro_f1, summary.stddev.macro_f1) =
        column_stats(&SweepRow::macro_f1);
    report.summaries.push_back(std::move(summary));
  }
  return report;
}

namespace {

std::string percent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value * 100.0);
  return buffer;
}

std::string raw(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_metric_cells(const SweepRow& row, std::ostream& out) {
  out << percent(row.micro) << ',' << percent(row.macro_p) << ',' << percent(row.macro_r)
      << ',' << percent(row.macro_f1) << ',' << raw(row.micro) << ',' << raw(row.macro_p)
      << ',' << raw(row.macro_r) << ',' << raw(row.macro_f1);
}

}  // namespace

void write_sweep_csv(const SweepReport& report, std::ostream& out) {
  out << "strategy,k,micro,macro_p,macro_r,macro_f1,"
         "micro_raw,macro_p_raw,macro_r_raw,macro_f1_raw\n";
  for (const auto& row : report.rows) {
    out << strategy_name(row.strategy) << ',' << row.k << ',';
    write_metric_cells(row, out);
    out << '\n';
  }
  for (const auto& summary : report.summaries) {
    out << strategy_name(summary.strategy) << ",Avg.,";
    write_metric_cells(summary.mean, out);
    out << '\n';
    out << strategy_name(summary.strategy) << ",STDev,";
    write_metric_cells(summary.stddev, out);
    out << '\n';
  }
}

void write_per_class_f1_csv(const SweepReport& report, std::ostream& out) {
  out << "strategy,k,class,f1,f1_raw\n";
  for (const auto& row : report.per_class) {
    out << strategy_name(row.strategy) << ',' << row.k << ',' << row.category << ','
        << percent(row.f1) << ',' << raw(row.f1) << '\n';
  }
}

}  // namespace textknn
