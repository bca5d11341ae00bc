#include "textknn/synth.hpp"

#include <cmath>
#include <cstdio>

#include "textknn/errors.hpp"
#include "textknn/rng.hpp"

namespace textknn {

namespace {

std::string padded_name(const char* prefix, std::size_t value, int width) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%s%0*zu", prefix, width, value);
  return buffer;
}

}  // namespace

Corpus generate_synthetic_corpus(const SynthSpec& spec) {
  const auto class_count = static_cast<std::int64_t>(spec.class_sizes.size());
  if (class_count < 1) throw ConfigError("need at least one class size");
  for (const auto size : spec.class_sizes) {
    if (size < 1) throw ConfigError("class sizes must be >= 1");
  }
  if (spec.terms_per_doc < 1) throw ConfigError("terms_per_doc must be >= 1");
  if (spec.noise_fraction < 0.0 || spec.noise_fraction > 1.0) {
    throw ConfigError("noise_fraction must be in [0, 1]");
  }
  const auto noise_terms =
      static_cast<std::int64_t>(std::llround(static_cast<double>(spec.vocab_size) *
                                             spec.noise_fraction));
  const std::int64_t core_terms = (spec.vocab_size - noise_terms) / class_count;
  if (core_terms < 1) throw ConfigError("vocab_size leaves no core terms per class");

  // Vocabulary layout: [0, noise_terms) shared pool, then one core block
  // per class.
  std::mt19937_64 gen(spec.seed);
  std::vector<Document> documents;
  for (std::size_t c = 0; c < spec.class_sizes.size(); ++c) {
    const std::string category = padded_name("c", c + 1, 2);
    const std::int64_t core_base = noise_terms + static_cast<std::int64_t>(c) * core_terms;
    for (std::int64_t d = 0; d < spec.class_sizes[c]; ++d) {
      Document doc;
      doc.id = category + "_" + padded_name("", static_cast<std::size_t>(d + 1), 4);
      doc.label = category;
      doc.tokens.reserve(static_cast<std::size_t>(spec.terms_per_doc));
      for (std::int64_t t = 0; t < spec.terms_per_doc; ++t) {
        std::int64_t term;
        if (noise_terms > 0 && rng::uniform_real(gen) < spec.noise_fraction) {
          term = static_cast<std::int64_t>(
              rng::uniform_index(gen, static_cast<std::uint64_t>(noise_terms)));
        } else {
          term = core_base + static_cast<std::int64_t>(
                                 rng::uniform_index(gen, static_cast<std::uint64_t>(core_terms)));
        }
        doc.tokens.push_back("w" + std::to_string(term));
      }
      documents.push_back(std::move(doc));
    }
  }
  return Corpus(std::move(documents));
}

}  // namespace textknn
