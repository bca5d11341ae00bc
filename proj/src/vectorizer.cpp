#include "textknn/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "textknn/errors.hpp"

namespace textknn {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::int64_t> df,
                       std::int64_t corpus_size)
    : terms_(std::move(terms)), df_(std::move(df)), corpus_size_(corpus_size) {
  if (terms_.size() != df_.size()) throw ConfigError("terms/df size mismatch");
  if (corpus_size_ < 1) throw ConfigError("corpus_size must be >= 1");
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (df_[i] < 1 || df_[i] > corpus_size_) {
      throw ConfigError("df out of range for term: " + terms_[i]);
    }
    if (!index_.emplace(terms_[i], static_cast<std::int64_t>(i)).second) {
      throw ConfigError("duplicate vocabulary term: " + terms_[i]);
    }
  }
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
  const auto it = index_.find(term);
  return it == index_.end() ? -1 : it->second;
}

SparseVector::SparseVector(std::vector<Entry> entries, bool normalized)
    : entries_(std::move(entries)), normalized_(normalized) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].weight > 0.0) || !std::isfinite(entries_[i].weight)) {
      throw ConfigError("sparse vector weights must be positive and finite");
    }
    if (i > 0 && entries_[i - 1].index >= entries_[i].index) {
      throw ConfigError("sparse vector indices must be strictly ascending");
    }
  }
  if (normalized_) {
    if (entries_.empty()) throw ConfigError("empty vector cannot be normalized");
    if (std::abs(norm() - 1.0) > 1e-9) throw ConfigError("vector is not unit length");
  }
}

double SparseVector::norm() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

void SparseVector::normalize() {
  if (entries_.empty()) return;
  const double n = norm();
  for (auto& e : entries_) e.weight /= n;
  normalized_ = true;
}

Vocabulary fit_vocabulary(const Corpus& train) {
  if (train.empty()) throw ConfigError("cannot fit vocabulary on an empty corpus");
  std::unordered_map<std::string, std::int64_t> df;
  std::unordered_set<std::string_view> seen;  // distinct terms of the current doc
  for (const auto& doc : train.documents()) {
    seen.clear();
    for (const auto& token : doc.tokens) {
      if (seen.insert(token).second) ++df[token];
    }
  }
  std::vector<std::string> terms;
  terms.reserve(df.size());
  for (const auto& [term, count] : df) terms.push_back(term);
  std::sort(terms.begin(), terms.end());
  std::vector<std::int64_t> counts;
  counts.reserve(terms.size());
  for (const auto& term : terms) counts.push_back(df.at(term));
  return Vocabulary(std::move(terms), std::move(counts),
                    static_cast<std::int64_t>(train.size()));
}

double term_weight(std::int64_t tf, std::int64_t df, std::int64_t corpus_size) {
  if (tf < 1) throw ConfigError("tf must be >= 1");
  if (df < 1 || df > corpus_size) throw ConfigError("df must be in [1, corpus_size]");
  return (1.0 + std::log(static_cast<double>(tf))) *
         std::log(static_cast<double>(corpus_size) / static_cast<double>(df));
}

SparseVector vectorize(const Document& doc, const Vocabulary& vocab) {
  std::unordered_map<std::int64_t, std::int64_t> tf;
  for (const auto& token : doc.tokens) {
    const std::int64_t index = vocab.index_of(token);
    if (index >= 0) ++tf[index];
  }
  std::vector<SparseVector::Entry> entries;
  entries.reserve(tf.size());
  for (const auto& [index, count] : tf) {
    const std::int64_t df = vocab.df(static_cast<std::size_t>(index));
    if (df == vocab.corpus_size()) continue;  // idf 0, drop
    entries.push_back({static_cast<std::uint32_t>(index),
                       term_weight(count, df, vocab.corpus_size())});
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  SparseVector vec(std::move(entries), /*normalized=*/false);
  vec.normalize();
  return vec;
}

double cosine(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  if (!a.normalized() || !b.normalized()) {
    throw ConfigError("cosine requires normalized inputs");
  }
  const auto ea = a.entries();
  const auto eb = b.entries();
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].index < eb[j].index) {
      ++i;
    } else if (ea[i].index > eb[j].index) {
      ++j;
    } else {
      dot += ea[i].weight * eb[j].weight;
      ++i;
      ++j;
    }
  }
  return std::clamp(dot, 0.0, 1.0);
}

void save_vocabulary(const Vocabulary& vocab, std::ostream& out) {
  out << "#|D|=" << vocab.corpus_size() << "\n";
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out << vocab.terms()[i] << '\t' << i << '\t' << vocab.df(i) << "\n";
  }
}

Vocabulary load_vocabulary(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("#|D|=", 0) != 0) {
    throw ConfigError("vocabulary dump must start with #|D|=<n>");
  }
  const std::int64_t corpus_size = std::stoll(line.substr(5));
  std::vector<std::string> terms;
  std::vector<std::int64_t> df;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ConfigError("malformed vocabulary line: " + line);
    }
    const std::size_t index = std::stoull(line.substr(t1 + 1, t2 - t1 - 1));
    if (index != terms.size()) throw ConfigError("vocabulary indices must be dense");
    terms.push_back(line.substr(0, t1));
    df.push_back(std::stoll(line.substr(t2 + 1)));
  }
  return Vocabulary(std::move(terms), std::move(df), corpus_size);
}

}  // namespace textknn
