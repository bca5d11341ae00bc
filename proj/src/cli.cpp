#include "textknn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "textknn/corpus.hpp"
#include "textknn/errors.hpp"
#include "textknn/eval.hpp"
#include "textknn/knn.hpp"
#include "textknn/model_io.hpp"
#include "textknn/sweep.hpp"
#include "textknn/synth.hpp"
#include "textknn/vectorizer.hpp"

namespace fs = std::filesystem;

namespace textknn::cli {

namespace {

struct CommonCorpusOptions {
  std::string corpus_path;
  std::string format = "dir";
  std::string tokenizer = "whitespace";

  Corpus load() const {
    return load_corpus(corpus_path, corpus_format_by_name(format),
                       tokenizer_by_name(tokenizer));
  }
};

void add_corpus_options(CLI::App& cmd, CommonCorpusOptions& options) {
  cmd.add_option("--corpus", options.corpus_path, "corpus path")->required();
  cmd.add_option("--format", options.format, "corpus layout: dir or tsv")
      ->check(CLI::IsMember({"dir", "tsv"}));
  cmd.add_option("--tokenizer", options.tokenizer, "tokenizer: whitespace or char")
      ->check(CLI::IsMember({"whitespace", "char"}));
}

std::string fixed2(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

std::string fixed6(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

void print_distribution(const ClassDistribution& dist, std::ostream& out) {
  out << "No.\tCategory\tNumber\tPercentage\n";
  const auto total = static_cast<double>(dist.total());
  for (std::size_t c = 0; c < dist.categories.size(); ++c) {
    out << (c + 1) << '\t' << dist.categories[c] << '\t' << dist.counts[c] << '\t'
        << fixed2(100.0 * static_cast<double>(dist.counts[c]) / total) << '\n';
  }
}

int cmd_train(const CommonCorpusOptions& corpus_options, const std::string& model_out,
              const std::string& vocab_out, std::ostream& out) {
  const Corpus corpus = corpus_options.load();
  const Vocabulary vocab = fit_vocabulary(corpus);
  ModelFile file{vocab, train(corpus, vocab), corpus_options.tokenizer};
  save_model(file, fs::path(model_out));
  if (!vocab_out.empty()) {
    std::ofstream vout(vocab_out, std::ios::binary);
    if (!vout) throw IoError("cannot write " + vocab_out);
    save_vocabulary(vocab, vout);
  }
  print_distribution(file.model.distribution, out);
  return exit_ok;
}

std::string read_input_text(const std::string& input) {
  if (input == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(input, std::ios::binary);
  if (!in) throw IoError("cannot read " + input);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// With self-matching disabled, a query that names a training document is
/// kept out of its own neighbor list. Candidate ids are the file stem and
/// "<parent dir>/<stem>", matching both corpus layouts; stdin has no id.
std::optional<std::size_t> self_match_exclusion(const TrainedModel& model,
                                                const std::string& input) {
  if (input == "-") return std::nullopt;
  const fs::path path(input);
  std::vector<std::string> candidates{path.stem().string()};
  if (path.has_parent_path() && path.parent_path().has_filename()) {
    candidates.push_back(path.parent_path().filename().string() + "/" + path.stem().string());
  }
  for (const auto& candidate : candidates) {
    const auto it = std::find(model.doc_ids.begin(), model.doc_ids.end(), candidate);
    if (it != model.doc_ids.end()) {
      return static_cast<std::size_t>(it - model.doc_ids.begin());
    }
  }
  return std::nullopt;
}

int cmd_classify(const std::string& model_path, const std::string& input, std::int64_t k,
                 const std::string& strategy, const std::string& self_match,
                 std::ostream& out) {
  if (k < 1) throw ConfigError("k must be >= 1");
  const ModelFile file = load_model(fs::path(model_path));
  const Tokenizer tokenizer = tokenizer_by_name(file.tokenizer_name);

  Document query_doc;
  query_doc.id = input;
  query_doc.tokens = tokenizer(read_input_text(input));
  const SparseVector query = vectorize(query_doc, file.vocabulary);

  std::optional<std::size_t> exclude;
  if (self_match == "off") exclude = self_match_exclusion(file.model, input);
  const Decision decision =
      classify(file.model, query, k, strategy_by_name(strategy), exclude);

  out << decision.predicted << '\t' << (decision.degenerate ? "true" : "false") << '\n';
  std::vector<std::size_t> order(decision.scores.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (decision.scores[a] != decision.scores[b]) {
      return decision.scores[a] > decision.scores[b];
    }
    return file.model.categories[a] < file.model.categories[b];
  });
  for (const auto c : order) {
    out << file.model.categories[c] << '\t' << fixed6(decision.scores[c]) << '\n';
  }
  return exit_ok;
}

std::vector<std::int64_t> parse_k_list(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream stream(csv);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    if (cell.empty()) continue;
    try {
      values.push_back(std::stoll(cell));
    } catch (const std::exception&) {
      throw ConfigError("bad k value: " + cell);
    }
  }
  if (values.empty()) throw ConfigError("--k-list is empty");
  return values;
}

int cmd_sweep(const CommonCorpusOptions& corpus_options, const SweepConfig& config,
              const std::string& out_dir, std::ostream& out) {
  const Corpus corpus = corpus_options.load();
  const SweepReport report = run_sweep(corpus, config);

  fs::create_directories(out_dir);
  const auto write_file = [&](const char* name, auto&& writer) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write " + path.string());
    writer(report, file);
    out << "wrote " << path.string() << '\n';
  };
  write_file("table2.csv", [](const SweepReport& r, std::ostream& s) { write_sweep_csv(r, s); });
  write_file("per_class_f1.csv",
             [](const SweepReport& r, std::ostream& s) { write_per_class_f1_csv(r, s); });
  return exit_ok;
}

std::vector<std::int64_t> parse_sizes(const std::string& csv) {
  std::vector<std::int64_t> sizes;
  std::stringstream stream(csv);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    if (cell.empty()) continue;
    try {
      sizes.push_back(std::stoll(cell));
    } catch (const std::exception&) {
      throw ConfigError("bad class size: " + cell);
    }
  }
  if (sizes.empty()) throw ConfigError("--sizes is empty");
  return sizes;
}

int cmd_synth(const SynthSpec& spec, const std::string& out_path, const std::string& format,
              std::ostream& out) {
  const Corpus corpus = generate_synthetic_corpus(spec);
  if (format == "tsv") {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot write " + out_path);
    for (const auto& doc : corpus.documents()) {
      file << *doc.label << '\t';
      for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
        if (t > 0) file << ' ';
        file << doc.tokens[t];
      }
      file << '\n';
    }
  } else {
    for (const auto& doc : corpus.documents()) {
      const fs::path dir = fs::path(out_path) / *doc.label;
      fs::create_directories(dir);
      std::ofstream file(dir / (doc.id + ".txt"), std::ios::binary);
      if (!file) throw IoError("cannot write under " + out_path);
      for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
        if (t > 0) file << ' ';
        file << doc.tokens[t];
      }
      file << '\n';
    }
  }
  out << "wrote " << corpus.size() << " documents in " << corpus.categories().size()
      << " classes to " << out_path << '\n';
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kNN text categorization: train, classify, and k-sweep evaluation"};
  app.require_subcommand(1);

  // train
  auto* train_cmd = app.add_subcommand("train", "vectorize a corpus and write a model file");
  CommonCorpusOptions train_corpus;
  add_corpus_options(*train_cmd, train_corpus);
  std::string model_out;
  std::string vocab_out;
  train_cmd->add_option("--out", model_out, "model file to write")->required();
  train_cmd->add_option("--vocab-out", vocab_out, "also dump the vocabulary TSV here");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify one document with a model");
  std::string model_path, input = "-", strategy = "weighted", self_match = "off";
  std::int64_t k = 10;
  classify_cmd->add_option("--model", model_path, "model file")->required();
  classify_cmd->add_option("--input", input, "document path, or - for stdin");
  classify_cmd->add_option("--k", k, "number of neighbors");
  classify_cmd->add_option("--strategy", strategy, "majority, weighted, or topn")
      ->check(CLI::IsMember({"majority", "weighted", "topn"}));
  classify_cmd
      ->add_option("--self-match", self_match,
                   "on: a training document may match itself; off: it is excluded")
      ->check(CLI::IsMember({"on", "off"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "k-sweep evaluation over a fold pair");
  CommonCorpusOptions sweep_corpus;
  add_corpus_options(*sweep_cmd, sweep_corpus);
  std::string k_list = "5,10,15,20,25,30,35,40,45,50,55,60";
  std::vector<std::string> strategies;
  std::uint64_t seed = 42;
  int folds = 10, train_fold = 0, test_fold = 1;
  std::string sweep_out;
  sweep_cmd->add_option("--k-list", k_list, "comma-separated k values");
  sweep_cmd->add_option("--strategy", strategies, "strategies to sweep (repeatable)")
      ->check(CLI::IsMember({"majority", "weighted", "topn"}));
  sweep_cmd->add_option("--seed", seed, "fold split seed");
  sweep_cmd->add_option("--folds", folds, "number of folds");
  sweep_cmd->add_option("--train-fold", train_fold, "training fold index");
  sweep_cmd->add_option("--test-fold", test_fold, "test fold index");
  sweep_cmd->add_option("--out", sweep_out, "output directory for the CSV reports")->required();

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic labeled corpus");
  std::string sizes = "10,10";
  SynthSpec spec;
  std::string synth_out, synth_format = "tsv";
  synth_cmd->add_option("--sizes", sizes, "comma-separated class sizes");
  synth_cmd->add_option("--vocab-size", spec.vocab_size, "total vocabulary size");
  synth_cmd->add_option("--doc-len", spec.terms_per_doc, "tokens per document");
  synth_cmd->add_option("--noise", spec.noise_fraction, "shared-noise fraction in [0,1]");
  synth_cmd->add_option("--seed", spec.seed, "generator seed");
  synth_cmd->add_option("--out", synth_out, "output path (tsv file or directory root)")
      ->required();
  synth_cmd->add_option("--format", synth_format, "tsv or dir")
      ->check(CLI::IsMember({"tsv", "dir"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (train_cmd->parsed()) {
      return cmd_train(train_corpus, model_out, vocab_out, out);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(model_path, input, k, strategy, self_match, out);
    }
    if (sweep_cmd->parsed()) {
      SweepConfig config;
      config.k_values = parse_k_list(k_list);
      if (!strategies.empty()) {
        config.strategies.clear();
        for (const auto& name : strategies) config.strategies.push_back(strategy_by_name(name));
      }
      config.seed = seed;
      config.folds = folds;
      config.train_fold = train_fold;
      config.test_fold = test_fold;
      return cmd_sweep(sweep_corpus, config, sweep_out, out);
    }
    if (synth_cmd->parsed()) {
      spec.class_sizes = parse_sizes(sizes);
      return cmd_synth(spec, synth_out, synth_format, out);
    }
    err << "no subcommand given\n";
    return exit_usage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  }
}

}  // namespace textknn::cli
