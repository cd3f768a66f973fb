#pragma once

#include <filesystem>

namespace sketcheval {

// Procedurally generated benchmark: 6 sketches, 3 methods (identity,
// noisy-copy, shuffled-unrelated) with 10 renders per sketch each, and 50
// synthetic real images. Deterministic for a fixed seed. Returns the path
// of the written manifest.
std::filesystem::path generate_synth_benchmark(const std::filesystem::path& dir,
                                               unsigned seed = 20240901);

}  // namespace sketcheval
