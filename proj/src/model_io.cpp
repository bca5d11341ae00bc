#include "textknn/model_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "textknn/errors.hpp"

namespace textknn {

namespace {

std::string expect_header(std::istream& in, const std::string& prefix) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(prefix, 0) != 0) {
    throw ConfigError("model file: expected header " + prefix);
  }
  return line.substr(prefix.size());
}

void check_field(const std::string& value, const char* what) {
  if (value.find('\t') != std::string::npos || value.find('\n') != std::string::npos) {
    throw ConfigError(std::string("model file: ") + what + " may not contain tabs or newlines");
  }
}

std::string format_weight(double weight) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", weight);
  return buffer;
}

}  // namespace

void save_model(const ModelFile& file, std::ostream& out) {
  file.model.validate();
  out << "#textknn-model v1\n";
  out << "#tokenizer=" << file.tokenizer_name << "\n";
  out << "#log=natural\n";
  out << "#|D|=" << file.vocabulary.corpus_size() << "\n";
  out << "#vocab=" << file.vocabulary.size() << "\n";
  for (std::size_t i = 0; i < file.vocabulary.size(); ++i) {
    check_field(file.vocabulary.terms()[i], "term");
    out << file.vocabulary.terms()[i] << '\t' << i << '\t' << file.vocabulary.df(i) << "\n";
  }
  out << "#docs=" << file.model.size() << "\n";
  for (std::size_t i = 0; i < file.model.size(); ++i) {
    check_field(file.model.doc_ids[i], "doc id");
    check_field(file.model.label_name(i), "label");
    out << file.model.doc_ids[i] << '\t' << file.model.label_name(i) << '\t';
    const auto entries = file.model.vectors[i].entries();
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (e > 0) out << ',';
      out << entries[e].index << ':' << format_weight(entries[e].weight);
    }
    out << "\n";
  }
}

ModelFile load_model(std::istream& in) {
  expect_header(in, "#textknn-model v1");
  ModelFile file;
  file.tokenizer_name = expect_header(in, "#tokenizer=");
  const std::string log_tag = expect_header(in, "#log=");
  if (log_tag != "natural") throw ConfigError("model file: unsupported log base " + log_tag);

  const std::int64_t corpus_size = std::stoll(expect_header(in, "#|D|="));
  const std::size_t vocab_count = std::stoull(expect_header(in, "#vocab="));
  std::vector<std::string> terms;
  std::vector<std::int64_t> df;
  terms.reserve(vocab_count);
  std::string line;
  for (std::size_t i = 0; i < vocab_count; ++i) {
    if (!std::getline(in, line)) throw ConfigError("model file: truncated vocabulary block");
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ConfigError("model file: malformed vocabulary line: " + line);
    }
    if (std::stoull(line.substr(t1 + 1, t2 - t1 - 1)) != i) {
      throw ConfigError("model file: vocabulary indices must be dense and ordered");
    }
    terms.push_back(line.substr(0, t1));
    df.push_back(std::stoll(line.substr(t2 + 1)));
  }
  file.vocabulary = Vocabulary(std::move(terms), std::move(df), corpus_size);

  const std::size_t doc_count = std::stoull(expect_header(in, "#docs="));
  std::set<std::string> labels;
  std::vector<std::string> raw_labels;
  raw_labels.reserve(doc_count);
  for (std::size_t i = 0; i < doc_count; ++i) {
    if (!std::getline(in, line)) throw ConfigError("model file: truncated vector block");
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ConfigError("model file: malformed vector line: " + line);
    }
    file.model.doc_ids.push_back(line.substr(0, t1));
    raw_labels.push_back(line.substr(t1 + 1, t2 - t1 - 1));
    labels.insert(raw_labels.back());

    std::vector<SparseVector::Entry> entries;
    const std::string body = line.substr(t2 + 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      const std::string cell = body.substr(pos, comma - pos);
      const auto colon = cell.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("model file: malformed vector entry: " + cell);
      }
      entries.push_back({static_cast<std::uint32_t>(std::stoul(cell.substr(0, colon))),
                         std::stod(cell.substr(colon + 1))});
      pos = comma + 1;
    }
    const bool normalized = !entries.empty();  // constructor re-checks unit norm
    file.model.vectors.emplace_back(std::move(entries), normalized);
  }

  file.model.categories.assign(labels.begin(), labels.end());
  ClassDistribution dist;
  dist.categories = file.model.categories;
  dist.counts.assign(dist.categories.size(), 0);
  for (const auto& label : raw_labels) {
    const auto it =
        std::lower_bound(file.model.categories.begin(), file.model.categories.end(), label);
    const auto index = static_cast<std::uint32_t>(it - file.model.categories.begin());
    file.model.labels.push_back(index);
    ++dist.counts[index];
  }
  dist.max_count = *std::max_element(dist.counts.begin(), dist.counts.end());
  file.model.distribution = std::move(dist);
  file.model.validate();
  return file;
}

void save_model(const ModelFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  save_model(file, out);
  if (!out) throw IoError("write failed: " + path.string());
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return load_model(in);
}

}  // namespace textknn
