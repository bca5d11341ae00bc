#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "textknn/errors.hpp"
#include "textknn/rng.hpp"
#include "textknn/vectorizer.hpp"

using namespace textknn;

namespace {

Corpus two_doc_corpus() {
  std::vector<Document> docs{{"1", "x", {"a", "b"}}, {"2", "x", {"b", "c"}}};
  return Corpus(std::move(docs));
}

}  // namespace

TEST_CASE("fit_vocabulary counts document frequencies") {
  const Vocabulary vocab = fit_vocabulary(two_doc_corpus());
  CHECK(vocab.size() == 3);
  CHECK(vocab.corpus_size() == 2);
  CHECK(vocab.df(static_cast<std::size_t>(vocab.index_of("a"))) == 1);
  CHECK(vocab.df(static_cast<std::size_t>(vocab.index_of("b"))) == 2);
  CHECK(vocab.df(static_cast<std::size_t>(vocab.index_of("c"))) == 1);
  CHECK(vocab.index_of("zebra") == -1);
}

TEST_CASE("df counts documents, not occurrences") {
  std::vector<Document> docs{{"1", "x", {"a", "a", "a"}}};
  const Vocabulary vocab = fit_vocabulary(Corpus(std::move(docs)));
  CHECK(vocab.df(static_cast<std::size_t>(vocab.index_of("a"))) == 1);

  std::vector<Document> ten;
  for (int i = 0; i < 10; ++i) ten.push_back({"d" + std::to_string(i), "x", {"x"}});
  const Vocabulary vocab10 = fit_vocabulary(Corpus(std::move(ten)));
  CHECK(vocab10.df(static_cast<std::size_t>(vocab10.index_of("x"))) == 10);
  CHECK(vocab10.corpus_size() == 10);
}

TEST_CASE("fit_vocabulary rejects an empty corpus") {
  CHECK_THROWS_AS(fit_vocabulary(Corpus()), ConfigError);
}

TEST_CASE("term weight formula") {
  // df equal to corpus size has idf log(1) = 0
  CHECK(term_weight(1, 8, 8) == 0.0);
  CHECK(term_weight(5, 8, 8) == 0.0);
  // tf = df = 1 leaves exactly log(corpus_size)
  CHECK(term_weight(1, 1, 3) == std::log(3.0));
  // (1 + ln 3) * ln 4, cross-checked by independent arithmetic
  CHECK(term_weight(3, 2, 8) == doctest::Approx(2.909294381957509).epsilon(1e-13));
  CHECK_THROWS_AS(term_weight(0, 1, 4), ConfigError);
  CHECK_THROWS_AS(term_weight(1, 0, 4), ConfigError);
  CHECK_THROWS_AS(term_weight(1, 5, 4), ConfigError);
}

TEST_CASE("term weight is monotone in tf and antitone in df") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::int64_t>(2 + rng::uniform_index(gen, 500));
    const auto df = static_cast<std::int64_t>(1 + rng::uniform_index(gen, n - 1));
    const auto tf = static_cast<std::int64_t>(1 + rng::uniform_index(gen, 50));
    CHECK(term_weight(tf + 1, df, n) > term_weight(tf, df, n));
    if (df + 1 < n) CHECK(term_weight(tf, df + 1, n) < term_weight(tf, df, n));
  }
}

TEST_CASE("vectorize normalizes and drops dead terms") {
  const Vocabulary vocab = fit_vocabulary(two_doc_corpus());

  SUBCASE("single informative term gets weight 1") {
    const SparseVector vec = vectorize({"q", std::nullopt, {"a"}}, vocab);
    REQUIRE(vec.entries().size() == 1);
    CHECK(vec.entries()[0].weight == 1.0);
    CHECK(vec.normalized());
  }
  SUBCASE("out-of-vocabulary documents become the empty vector") {
    const SparseVector vec = vectorize({"q", std::nullopt, {"zzz", "yyy"}}, vocab);
    CHECK(vec.empty());
    CHECK_FALSE(vec.normalized());
  }
  SUBCASE("idf-zero terms are dropped") {
    // b appears in every training document, so only a survives
    const SparseVector vec = vectorize({"q", std::nullopt, {"a", "a", "a", "b"}}, vocab);
    REQUIRE(vec.entries().size() == 1);
    CHECK(vec.entries()[0].index == static_cast<std::uint32_t>(vocab.index_of("a")));
    CHECK(vec.entries()[0].weight == 1.0);
  }
}

TEST_CASE("vectorize is a bag of words") {
  std::vector<Document> docs;
  for (int i = 0; i < 6; ++i) {
    docs.push_back({"d" + std::to_string(i), "x",
                    {"t" + std::to_string(i), "t" + std::to_string((i + 1) % 6), "u"}});
  }
  const Corpus corpus(std::move(docs));
  const Vocabulary vocab = fit_vocabulary(corpus);

  const Document forward{"q", std::nullopt, {"t0", "t1", "t2", "t1"}};
  const Document shuffled{"q", std::nullopt, {"t1", "t2", "t1", "t0"}};
  CHECK(vectorize(forward, vocab) == vectorize(shuffled, vocab));

  // duplication changes the weights (log-scaled tf), not just the scale
  const Document doubled{"q", std::nullopt, {"t0", "t1", "t2", "t1", "t0", "t1", "t2", "t1"}};
  CHECK(vectorize(forward, vocab) != vectorize(doubled, vocab));
}

TEST_CASE("vector norms stay within 1e-9 of one") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const SparseVector vec = testutil::random_vector(gen, 80, 10);
    CHECK(std::abs(vec.norm() - 1.0) <= 1e-9);
  }
}

TEST_CASE("cosine basics") {
  std::mt19937_64 gen(6);
  const SparseVector v = testutil::random_vector(gen, 40, 8);
  CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-12));

  SparseVector left({{0, 1.0}}, false);
  left.normalize();
  SparseVector right({{1, 1.0}}, false);
  right.normalize();
  CHECK(cosine(left, right) == 0.0);

  CHECK(cosine(SparseVector(), v) == 0.0);
  CHECK(cosine(v, SparseVector()) == 0.0);

  const SparseVector raw({{0, 2.0}, {3, 1.0}}, false);
  CHECK_THROWS_AS(cosine(raw, v), ConfigError);
}

TEST_CASE("cosine matches a brute-force dot product") {
  // the fixed pair first
  SparseVector a({{0, 0.5}, {2, 1.0}, {5, 0.25}}, false);
  SparseVector b({{0, 0.75}, {3, 0.5}, {5, 1.0}}, false);
  a.normalize();
  b.normalize();
  CHECK(cosine(a, b) == testutil::naive_dot(a, b));

  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const SparseVector x = testutil::random_vector(gen, 30, 8);
    const SparseVector y = testutil::random_vector(gen, 30, 8);
    const double c = cosine(x, y);
    CHECK(c == testutil::naive_dot(x, y));
    CHECK(c == cosine(y, x));  // symmetric, bit for bit
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("vocabulary dump round-trips") {
  const Vocabulary vocab = fit_vocabulary(two_doc_corpus());
  std::stringstream stream;
  save_vocabulary(vocab, stream);
  CHECK(stream.str().rfind("#|D|=2\n", 0) == 0);
  const Vocabulary reloaded = load_vocabulary(stream);
  CHECK(reloaded.terms() == vocab.terms());
  CHECK(reloaded.corpus_size() == vocab.corpus_size());
  for (std::size_t i = 0; i < vocab.size(); ++i) CHECK(reloaded.df(i) == vocab.df(i));
}

TEST_CASE("sparse vector invariants are enforced") {
  CHECK_THROWS_AS(SparseVector({{0, 0.0}}, false), ConfigError);
  CHECK_THROWS_AS(SparseVector({{0, -1.0}}, false), ConfigError);
  CHECK_THROWS_AS(SparseVector({{1, 0.5}, {1, 0.5}}, false), ConfigError);
  CHECK_THROWS_AS(SparseVector({{2, 0.5}, {1, 0.5}}, false), ConfigError);
  CHECK_THROWS_AS(SparseVector({{0, 0.5}}, true), ConfigError);  // not unit length
}
