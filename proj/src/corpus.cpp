#include "textknn/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "textknn/errors.hpp"
#include "textknn/rng.hpp"

namespace fs = std::filesystem;

namespace textknn {

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  std::unordered_set<std::string_view> ids;
  std::set<std::string> labels;
  for (const auto& doc : documents_) {
    if (!ids.insert(doc.id).second) {
      throw ConfigError("duplicate document id: " + doc.id);
    }
    if (doc.label) labels.insert(*doc.label);
  }
  categories_.assign(labels.begin(), labels.end());
}

std::int64_t ClassDistribution::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::size_t ClassDistribution::largest_class() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > counts[best]) best = i;
  }
  return best;
}

CorpusFormat corpus_format_by_name(const std::string& name) {
  if (name == "dir") return CorpusFormat::directory_per_class;
  if (name == "tsv") return CorpusFormat::tsv;
  throw ConfigError("unknown corpus format: " + name);
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Corpus load_directory_corpus(const fs::path& root, const Tokenizer& tokenizer) {
  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  // Directory iteration order is unspecified; sort for determinism.
  std::vector<fs::path> category_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) category_dirs.push_back(entry.path());
  }
  std::sort(category_dirs.begin(), category_dirs.end());

  std::vector<Document> documents;
  for (const auto& dir : category_dirs) {
    const std::string category = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      documents.push_back(Document{
          .id = category + "/" + file.stem().string(),
          .label = category,
          .tokens = tokenizer(read_file(file)),
      });
    }
  }
  if (documents.empty()) throw ConfigError("empty corpus: " + root.string());
  return Corpus(std::move(documents));
}

Corpus load_tsv_corpus(const fs::path& path, const Tokenizer& tokenizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::vector<Document> documents;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_number) +
                        ": expected <category>\\t<text>");
    }
    documents.push_back(Document{
        .id = std::to_string(line_number),
        .label = line.substr(0, tab),
        .tokens = tokenizer(std::string_view(line).substr(tab + 1)),
    });
  }
  if (documents.empty()) throw ConfigError("empty corpus: " + path.string());
  return Corpus(std::move(documents));
}

}  // namespace

Corpus load_corpus(const fs::path& source, CorpusFormat format, const Tokenizer& tokenizer) {
  if (!fs::exists(source)) throw IoError("no such path: " + source.string());
  switch (format) {
    case CorpusFormat::directory_per_class: return load_directory_corpus(source, tokenizer);
    case CorpusFormat::tsv: return load_tsv_corpus(source, tokenizer);
  }
  throw ConfigError("unreachable corpus format");
}

std::vector<Corpus> split_random_even(const Corpus& corpus, int parts, std::uint64_t seed) {
  if (parts < 2) throw ConfigError("parts must be >= 2");
  if (static_cast<std::size_t>(parts) > corpus.size()) {
    throw ConfigError("parts exceeds corpus size");
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 gen(seed);
  rng::shuffle(order, gen);

  std::vector<std::vector<Document>> folds(parts);
  for (std::size_t i = 0; i < order.size(); ++i) {
    folds[i % parts].push_back(corpus.documents()[order[i]]);
  }
  std::vector<Corpus> result;
  result.reserve(parts);
  for (auto& fold : folds) result.emplace_back(std::move(fold));
  return result;
}

ClassDistribution class_distribution(const Corpus& corpus) {
  ClassDistribution dist;
  dist.categories = corpus.categories();
  dist.counts.assign(dist.categories.size(), 0);
  for (const auto& doc : corpus.documents()) {
    if (!doc.label) throw ConfigError("unlabeled document: " + doc.id);
    const auto it = std::lower_bound(dist.categories.begin(), dist.categories.end(), *doc.label);
    ++dist.counts[static_cast<std::size_t>(it - dist.categories.begin())];
  }
  dist.max_count = dist.counts.empty() ? 0 : *std::max_element(dist.counts.begin(), dist.counts.end());
  return dist;
}

}  // namespace textknn
