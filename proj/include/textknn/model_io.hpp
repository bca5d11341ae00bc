#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "textknn/knn.hpp"
#include "textknn/vectorizer.hpp"

namespace textknn {

/// Everything needed to classify new text: the frozen model, the
/// vocabulary it was vectorized with, and the tokenizer to apply to
/// queries.
struct ModelFile {
  Vocabulary vocabulary;
  TrainedModel model;
  std::string tokenizer_name;
};

/// Self-describing text container:
///   #textknn-model v1
///   #tokenizer=<name>
///   #log=natural
///   #|D|=<n>
///   #vocab=<V>         followed by V lines "term\tindex\tdf"
///   #docs=<N>          followed by N lines "doc_id\tlabel\tidx:weight,..."
/// Weights are printed with 17 significant digits so reloading is exact.
void save_model(const ModelFile& file, std::ostream& out);
ModelFile load_model(std::istream& in);

void save_model(const ModelFile& file, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace textknn
