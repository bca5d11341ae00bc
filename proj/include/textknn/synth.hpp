#pragma once

#include <cstdint>
#include <vector>

#include "textknn/corpus.hpp"

namespace textknn {

/// Recipe for a deterministic synthetic corpus. Each class owns a block of
/// core terms; a shared noise pool creates cross-class overlap. With
/// noise_fraction 0 the classes are perfectly separable.
struct SynthSpec {
  std::vector<std::int64_t> class_sizes;
  std::int64_t vocab_size = 2000;
  std::int64_t terms_per_doc = 50;
  double noise_fraction = 0.5;  // share of the vocabulary and of each draw
  std::uint64_t seed = 1;
};

/// Class c is named "cNN" (zero padded), its documents "cNN_KKKK". Same
/// spec, same corpus, byte for byte.
Corpus generate_synthetic_corpus(const SynthSpec& spec);

}  // namespace textknn
