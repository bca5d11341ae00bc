#include <doctest.h>

#include <algorithm>
#include <random>

#include "textknn/errors.hpp"
#include "textknn/eval.hpp"
#include "textknn/rng.hpp"

using namespace textknn;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

/// Per-document tally, written independently of the counting in confusion().
ConfusionCounts brute_confusion(const Pairs& predictions, const Pairs& gold,
                                const std::vector<std::string>& categories) {
  ConfusionCounts counts;
  counts.categories = categories;
  counts.tp.assign(categories.size(), 0);
  counts.fp.assign(categories.size(), 0);
  counts.fn.assign(categories.size(), 0);
  counts.total = static_cast<std::int64_t>(predictions.size());
  for (std::size_t c = 0; c < categories.size(); ++c) {
    for (const auto& [id, predicted] : predictions) {
      const auto gold_it =
          std::find_if(gold.begin(), gold.end(), [&](const auto& g) { return g.first == id; });
      const bool predicted_c = predicted == categories[c];
      const bool gold_c = gold_it->second == categories[c];
      if (predicted_c && gold_c) ++counts.tp[c];
      if (predicted_c && !gold_c) ++counts.fp[c];
      if (!predicted_c && gold_c) ++counts.fn[c];
    }
  }
  return counts;
}

}  // namespace

TEST_CASE("f1 of equal inputs is that value, exactly") {
  for (const double x : {0.0, 0.1, 0.3, 0.6724, 1.0}) {
    CHECK(f1(x, x) == x);
  }
  CHECK(f1(1.0, 0.0) == 0.0);
  CHECK(f1(0.0, 1.0) == 0.0);
}

TEST_CASE("f1 of the published macro averages differs from the published macro F1") {
  // 2pr/(p+r) of (0.7074, 0.6724) is about 0.6895, not 0.6796: the table's
  // macro F1 must be the mean of per-class F1 values.
  const double combined = f1(0.7074, 0.6724);
  CHECK(combined == doctest::Approx(0.6894560950862445).epsilon(1e-13));
  CHECK(std::abs(combined - 0.6796) > 0.005);
}

TEST_CASE("confusion counts a fully correct run") {
  Pairs gold, predictions;
  for (int i = 0; i < 5; ++i) {
    const std::string id = "d" + std::to_string(i);
    const std::string label = i % 2 == 0 ? "a" : "b";
    gold.emplace_back(id, label);
    predictions.emplace_back(id, label);
  }
  const auto counts = confusion(predictions, gold, {"a", "b"});
  CHECK(counts.total == 5);
  CHECK(counts.tp[0] + counts.tp[1] == 5);
  CHECK(counts.fp == std::vector<std::int64_t>{0, 0});
  CHECK(counts.fn == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("confusion with every prediction swapped has no true positives") {
  Pairs gold{{"1", "a"}, {"2", "b"}, {"3", "a"}, {"4", "b"}};
  Pairs predictions{{"1", "b"}, {"2", "a"}, {"3", "b"}, {"4", "a"}};
  const auto counts = confusion(predictions, gold, {"a", "b"});
  CHECK(counts.tp == std::vector<std::int64_t>{0, 0});
  CHECK(counts.fp == std::vector<std::int64_t>{2, 2});
  CHECK(counts.fn == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("confusion matches the per-document tally on a mixed case") {
  Pairs gold{{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "b"}, {"5", "c"}, {"6", "c"}};
  Pairs predictions{{"1", "a"}, {"2", "b"}, {"3", "b"}, {"4", "c"}, {"5", "c"}, {"6", "a"}};
  const std::vector<std::string> categories{"a", "b", "c"};
  const auto counts = confusion(predictions, gold, categories);
  const auto expected = brute_confusion(predictions, gold, categories);
  CHECK(counts.tp == expected.tp);
  CHECK(counts.fp == expected.fp);
  CHECK(counts.fn == expected.fn);
  CHECK(counts.total == expected.total);
}

TEST_CASE("confusion rejects mismatched id sets") {
  Pairs gold{{"1", "a"}, {"2", "b"}};
  CHECK_THROWS_AS(confusion({{"1", "a"}}, gold, {"a", "b"}), ConfigError);
  CHECK_THROWS_AS(confusion({{"1", "a"}, {"9", "b"}}, gold, {"a", "b"}), ConfigError);
  CHECK_THROWS_AS(confusion({{"1", "a"}, {"1", "b"}}, gold, {"a", "b"}), ConfigError);
  Pairs dup_gold{{"1", "a"}, {"1", "b"}};
  CHECK_THROWS_AS(confusion(gold, dup_gold, {"a", "b"}), ConfigError);
  CHECK_THROWS_AS(confusion({{"1", "z"}, {"2", "b"}}, gold, {"a", "b"}), ConfigError);
}

TEST_CASE("micro average equals accuracy") {
  Pairs gold{{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "b"}};
  SUBCASE("all correct") {
    const auto micro = micro_average(confusion(gold, gold, {"a", "b"}));
    CHECK(micro.precision == 1.0);
    CHECK(micro.recall == 1.0);
    CHECK(micro.f1 == 1.0);
  }
  SUBCASE("three of four correct") {
    Pairs predictions{{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "a"}};
    const auto micro = micro_average(confusion(predictions, gold, {"a", "b"}));
    CHECK(micro.precision == 0.75);
    CHECK(micro.recall == 0.75);
    CHECK(micro.f1 == 0.75);
  }
}

TEST_CASE("micro precision, recall, and f1 are one number on random runs") {
  std::mt19937_64 gen(55);
  const std::vector<std::string> categories{"a", "b", "c", "d"};
  for (int trial = 0; trial < 100; ++trial) {
    Pairs gold, predictions;
    const auto docs = 1 + rng::uniform_index(gen, 40);
    for (std::size_t i = 0; i < docs; ++i) {
      const std::string id = std::to_string(i);
      gold.emplace_back(id, categories[rng::uniform_index(gen, categories.size())]);
      predictions.emplace_back(id, categories[rng::uniform_index(gen, categories.size())]);
    }
    const auto micro = micro_average(confusion(predictions, gold, categories));
    CHECK(micro.precision == micro.recall);
    CHECK(micro.recall == micro.f1);
  }
}

TEST_CASE("macro average spans all given categories") {
  Pairs gold{{"1", "a"}, {"2", "a"}};
  SUBCASE("perfect single class") {
    const auto macro = macro_average(confusion(gold, gold, {"a"}));
    CHECK(macro.precision == 1.0);
    CHECK(macro.recall == 1.0);
    CHECK(macro.f1 == 1.0);
  }
  SUBCASE("a never-seen category still enters the average when listed") {
    const auto macro = macro_average(confusion(gold, gold, {"a", "b"}));
    CHECK(macro.precision == 0.5);  // b contributes zeros
    CHECK(macro.recall == 0.5);
    CHECK(macro.f1 == 0.5);
  }
}

TEST_CASE("macro average on a three-class hand-built case") {
  // a: tp=2 fp=1 fn=0 -> p=2/3 r=1
  // b: tp=1 fp=0 fn=1 -> p=1   r=1/2
  // c: tp=2 fp=0 fn=0 -> p=1   r=1
  Pairs gold{{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "b"}, {"5", "c"}, {"6", "c"}};
  Pairs predictions{{"1", "a"}, {"2", "a"}, {"3", "b"}, {"4", "a"}, {"5", "c"}, {"6", "c"}};
  const auto counts = confusion(predictions, gold, {"a", "b", "c"});
  REQUIRE(counts.tp == std::vector<std::int64_t>{2, 1, 2});

  const auto macro = macro_average(counts);
  const double pa = 2.0 / 3.0, ra = 1.0;
  const double pb = 1.0, rb = 0.5;
  const double pc = 1.0, rc = 1.0;
  CHECK(macro.precision == doctest::Approx((pa + pb + pc) / 3.0));
  CHECK(macro.recall == doctest::Approx((ra + rb + rc) / 3.0));
  const double fa = 2 * pa * ra / (pa + ra);
  const double fb = 2 * pb * rb / (pb + rb);
  const double fc = 1.0;
  CHECK(macro.f1 == doctest::Approx((fa + fb + fc) / 3.0));
}

TEST_CASE("macro f1 is the mean of per-class f1, not f1 of the macro p/r") {
  Pairs gold{{"1", "a"}, {"2", "a"}, {"3", "a"}, {"4", "b"}};
  Pairs predictions{{"1", "a"}, {"2", "b"}, {"3", "b"}, {"4", "b"}};
  const auto counts = confusion(predictions, gold, {"a", "b"});
  const auto report = metrics_report(counts);
  const double mean_f1 = (report.per_class[0].f1 + report.per_class[1].f1) / 2.0;
  CHECK(report.macro.f1 == mean_f1);
  CHECK(report.macro.f1 != f1(report.macro.precision, report.macro.recall));

  double lo = 1.0, hi = 0.0;
  for (const auto& row : report.per_class) {
    lo = std::min(lo, row.f1);
    hi = std::max(hi, row.f1);
  }
  CHECK(report.macro.f1 >= lo);
  CHECK(report.macro.f1 <= hi);
}

TEST_CASE("document order does not change any metric") {
  Pairs gold{{"1", "a"}, {"2", "b"}, {"3", "a"}, {"4", "c"}, {"5", "b"}};
  Pairs predictions{{"1", "a"}, {"2", "a"}, {"3", "a"}, {"4", "c"}, {"5", "c"}};
  const auto base = metrics_report(confusion(predictions, gold, {"a", "b", "c"}));

  std::reverse(predictions.begin(), predictions.end());
  std::swap(gold[0], gold[3]);
  const auto permuted = metrics_report(confusion(predictions, gold, {"a", "b", "c"}));
  CHECK(base.micro == permuted.micro);
  CHECK(base.macro.precision == permuted.macro.precision);
  CHECK(base.macro.recall == permuted.macro.recall);
  CHECK(base.macro.f1 == permuted.macro.f1);
}
