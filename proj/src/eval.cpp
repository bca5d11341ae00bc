#include "textknn/eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "textknn/errors.hpp"

namespace textknn {

double f1(double p, double r) {
  if (p + r == 0.0) return 0.0;
  if (p == r) return p;  // harmonic mean of equals, kept exact
  return 2.0 * p * r / (p + r);
}

namespace {

double ratio(std::int64_t numerator, std::int64_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

ConfusionCounts confusion(const std::vector<std::pair<std::string, std::string>>& predictions,
                          const std::vector<std::pair<std::string, std::string>>& gold,
                          const std::vector<std::string>& categories) {
  if (predictions.size() != gold.size()) {
    throw ConfigError("prediction and gold lists differ in size");
  }
  std::unordered_map<std::string, std::size_t> category_index;
  for (std::size_t c = 0; c < categories.size(); ++c) category_index.emplace(categories[c], c);
  const auto index_of = [&](const std::string& label) {
    const auto it = category_index.find(label);
    if (it == category_index.end()) throw ConfigError("label not in categories: " + label);
    return it->second;
  };

  std::unordered_map<std::string, std::size_t> gold_by_id;
  for (const auto& [id, label] : gold) {
    if (!gold_by_id.emplace(id, index_of(label)).second) {
      throw ConfigError("duplicate gold id: " + id);
    }
  }

  ConfusionCounts counts;
  counts.categories = categories;
  counts.tp.assign(categories.size(), 0);
  counts.fp.assign(categories.size(), 0);
  counts.fn.assign(categories.size(), 0);

  std::unordered_map<std::string, bool> seen;
  for (const auto& [id, predicted] : predictions) {
    const auto it = gold_by_id.find(id);
    if (it == gold_by_id.end()) throw ConfigError("prediction for unknown id: " + id);
    if (!seen.emplace(id, true).second) throw ConfigError("duplicate prediction id: " + id);
    const std::size_t pred = index_of(predicted);
    const std::size_t truth = it->second;
    if (pred == truth) {
      ++counts.tp[pred];
    } else {
      ++counts.fp[pred];
      ++counts.fn[truth];
    }
    ++counts.total;
  }
  return counts;
}

PrecisionRecallF1 micro_average(const ConfusionCounts& counts) {
  if (counts.total < 1) throw ConfigError("micro average needs at least one document");
  std::int64_t tp = 0, tp_fp = 0, tp_fn = 0;
  for (std::size_t c = 0; c < counts.categories.size(); ++c) {
    tp += counts.tp[c];
    tp_fp += counts.tp[c] + counts.fp[c];
    tp_fn += counts.tp[c] + counts.fn[c];
  }
  PrecisionRecallF1 out;
  out.precision = ratio(tp, tp_fp);
  out.recall = ratio(tp, tp_fn);
  out.f1 = f1(out.precision, out.recall);
  return out;
}

PrecisionRecallF1 macro_average(const ConfusionCounts& counts) {
  if (counts.categories.empty()) throw ConfigError("macro average needs at least one category");
  double p_sum = 0.0, r_sum = 0.0, f1_sum = 0.0;
  for (std::size_t c = 0; c < counts.categories.size(); ++c) {
    const double p = ratio(counts.tp[c], counts.tp[c] + counts.fp[c]);
    const double r = ratio(counts.tp[c], counts.tp[c] + counts.fn[c]);
    p_sum += p;
    r_sum += r;
    f1_sum += f1(p, r);
  }
  const auto n = static_cast<double>(counts.categories.size());
  return {p_sum / n, r_sum / n, f1_sum / n};
}

MetricsReport metrics_report(const ConfusionCounts& counts) {
  MetricsReport report;
  report.categories = counts.categories;
  report.per_class.reserve(counts.categories.size());
  for (std::size_t c = 0; c < counts.categories.size(); ++c) {
    PrecisionRecallF1 row;
    row.precision = ratio(counts.tp[c], counts.tp[c] + counts.fp[c]);
    row.recall = ratio(counts.tp[c], counts.tp[c] + counts.fn[c]);
    row.f1 = f1(row.precision, row.recall);
    report.per_class.push_back(row);
  }
  report.micro = micro_average(counts).precision;  // p = r = f1 here
  report.macro = macro_average(counts);
  return report;
}

}  // namespace textknn
