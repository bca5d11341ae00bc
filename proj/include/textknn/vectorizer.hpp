#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "textknn/corpus.hpp"

namespace textknn {

/// Training vocabulary: dense term indices plus document frequencies.
/// Indices are assigned in lexicographic term order.
class Vocabulary {
public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> terms, std::vector<std::int64_t> df,
             std::int64_t corpus_size);

  /// Term index, or -1 when out of vocabulary.
  std::int64_t index_of(const std::string& term) const;
  const std::vector<std::string>& terms() const { return terms_; }
  std::int64_t df(std::size_t index) const { return df_[index]; }
  std::int64_t corpus_size() const { return corpus_size_; }
  std::size_t size() const { return terms_.size(); }

private:
  std::vector<std::string> terms_;
  std::vector<std::int64_t> df_;
  std::unordered_map<std::string, std::int64_t> index_;
  std::int64_t corpus_size_ = 0;
};

/// Sparse term-weight vector. Entries are sorted by ascending term index,
/// which fixes the floating-point summation order; stored weights are
/// finite and strictly positive.
class SparseVector {
public:
  struct Entry {
    std::uint32_t index;
    double weight;
    bool operator==(const Entry&) const = default;
  };

  SparseVector() = default;
  /// Entries must be sorted by strictly ascending index with positive
  /// finite weights. `normalized` asserts unit L2 norm.
  SparseVector(std::vector<Entry> entries, bool normalized);

  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool normalized() const { return normalized_; }
  double norm() const;
  /// Divides by the L2 norm and sets the flag. Empty vectors stay empty
  /// and unnormalized.
  void normalize();

  bool operator==(const SparseVector&) const = default;

private:
  std::vector<Entry> entries_;
  bool normalized_ = false;
};

/// Collects every distinct term of the training corpus with its document
/// frequency. Throws on an empty corpus.
Vocabulary fit_vocabulary(const Corpus& train);

/// Unnormalized weight of one term: (1 + ln tf) * ln(corpus_size / df).
/// Natural log on both factors. Returns 0 when df == corpus_size.
double term_weight(std::int64_t tf, std::int64_t df, std::int64_t corpus_size);

/// Maps a document onto the training vocabulary and L2-normalizes.
/// Out-of-vocabulary and zero-weight terms are dropped; a document with
/// nothing left yields the empty vector.
SparseVector vectorize(const Document& doc, const Vocabulary& vocab);

/// Dot product of two unit vectors, clamped to [0, 1]. Empty vectors have
/// similarity 0 to everything; non-empty inputs must be normalized.
double cosine(const SparseVector& a, const SparseVector& b);

/// Vocabulary dump: one "#|D|=<n>" header line, then "term\tindex\tdf".
void save_vocabulary(const Vocabulary& vocab, std::ostream& out);
Vocabulary load_vocabulary(std::istream& in);

}  // namespace textknn
