#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "textknn/tokenizer.hpp"

namespace textknn {

/// A labeled or unlabeled token sequence with a stable id.
struct Document {
  std::string id;
  std::optional<std::string> label;
  std::vector<std::string> tokens;
};

/// Immutable document collection. Categories are the distinct labels,
/// sorted lexicographically; that order is the canonical class order
/// used for every deterministic tie-break downstream.
class Corpus {
public:
  Corpus() = default;
  /// Validates id uniqueness and derives the category list.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<std::string>& categories() const { return categories_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

private:
  std::vector<Document> documents_;
  std::vector<std::string> categories_;
};

/// Per-category training-set sizes, aligned with `categories`.
struct ClassDistribution {
  std::vector<std::string> categories;
  std::vector<std::int64_t> counts;
  std::int64_t max_count = 0;

  std::int64_t total() const;
  /// Index of the largest class; ties go to the earlier canonical name.
  std::size_t largest_class() const;
};

enum class CorpusFormat { directory_per_class, tsv };

CorpusFormat corpus_format_by_name(const std::string& name);

/// Loads a labeled corpus.
///
/// directory_per_class: <root>/<category>/<file>, UTF-8 plain text; the
/// document id is "<category>/<file stem>". tsv: one "<category>\t<text>"
/// line per document, LF line endings; the id is the 1-based line number.
Corpus load_corpus(const std::filesystem::path& source, CorpusFormat format,
                   const Tokenizer& tokenizer);

/// Shuffles with a seeded generator, then deals round-robin into `parts`
/// folds. Fold sizes differ by at most one; folds partition the corpus.
std::vector<Corpus> split_random_even(const Corpus& corpus, int parts, std::uint64_t seed);

/// Exact label frequencies. Every document must be labeled.
ClassDistribution class_distribution(const Corpus& corpus);

}  // namespace textknn
