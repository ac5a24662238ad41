#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "crcodes/hypercube.hpp"
#include "crcodes/vertexset.hpp"

// Data-parallel inner loops of the toolkit. Each kernel ships in two forms:
// the production version (word-level bit tricks, OpenMP above a size
// threshold) and a *_reference version written as plainly as possible, kept
// for the test suite and the benchmark to compare against.
namespace crcodes::kernels {

// out = set of all vertices one coordinate flip away from a member of in.
// (out is overwritten, not accumulated into.)
void expand_neighbors(const VertexSet& in, VertexSet& out);
void expand_neighbors_reference(const VertexSet& in, VertexSet& out);

// Smallest pairwise Hamming distance of a list of distinct words; nullopt
// when fewer than two words.
std::optional<int> min_pairwise_distance(std::span<const word> words);
std::optional<int> min_pairwise_distance_reference(std::span<const word> words);

// Number of vertex words processed per OpenMP chunk before parallelism pays
// for itself; kernels stay serial below these sizes.
inline constexpr std::size_t parallel_word_threshold = 1 << 10;   // 2^16 vertices
inline constexpr std::size_t parallel_pair_threshold = 1 << 21;   // word pairs

}  // namespace crcodes::kernels
