#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace textknn {

/// Per-class binary decision counts for a single-label evaluation.
struct ConfusionCounts {
  std::vector<std::string> categories;
  std::vector<std::int64_t> tp, fp, fn;
  std::int64_t total = 0;
};

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Per-class and averaged scores. In the single-label setting the three
/// micro values are one identical number; macro_f1 is the unweighted mean
/// of the per-class F1 values (not F1 of the macro averages).
struct MetricsReport {
  std::vector<std::string> categories;
  std::vector<PrecisionRecallF1> per_class;
  double micro = 0.0;
  PrecisionRecallF1 macro;
};

/// Harmonic mean of precision and recall: 2pr/(p+r), 0 when p+r is 0.
/// Equal inputs return exactly that value.
double f1(double p, double r);

/// Tallies tp/fp/fn per category from (id, label) pairs. Prediction and
/// gold ids must form the same set, each exactly once, and every label
/// must be a known category.
ConfusionCounts confusion(const std::vector<std::pair<std::string, std::string>>& predictions,
                          const std::vector<std::pair<std::string, std::string>>& gold,
                          const std::vector<std::string>& categories);

/// Globally pooled precision/recall/F1; equals accuracy here, and the
/// three values are exactly equal.
PrecisionRecallF1 micro_average(const ConfusionCounts& counts);

/// Unweighted per-class means over every category, including categories
/// with no test documents. Undefined ratios count as 0.
PrecisionRecallF1 macro_average(const ConfusionCounts& counts);

/// Full report: per-class rows plus micro and macro averages.
MetricsReport metrics_report(const ConfusionCounts& counts);

}  // namespace textknn
