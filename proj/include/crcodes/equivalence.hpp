#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crcodes/hypercube.hpp"

namespace crcodes {

// The exact canonicalizer is sized for the classification range.
inline constexpr int max_canonical_length = 16;
inline constexpr std::size_t max_canonical_size = 64;

// Distinguished representative of the orbit of c under Aut(Gamma):
// the lexicographically least sorted codeword list over all translates
// by codewords (forcing 0 into the code) and coordinate permutations.
Code canonical_form(const Code& c);

bool are_equivalent(const Code& a, const Code& b);

namespace detail {

// Branch-and-bound over coordinate orderings. Positions are assigned from the
// most significant bit down; rows are kept sorted by their partial values via
// stable group refinement, and a branch dies as soon as its partial sorted
// list exceeds the reference. Identical columns are interchangeable and
// branch once. One instance holds reusable buffers; not shareable across
// threads.
class PermutationMinimizer {
  public:
    // Returns min(reference, least sorted list over column permutations of
    // words). reference must be sorted ascending and the same size as words.
    std::vector<word> minimize(std::span<const word> words, int n, std::vector<word> reference);

    // True iff sorted_words (ascending, distinct) is the least list in its
    // orbit under column permutations alone.
    bool is_minimal(std::span<const word> sorted_words, int n);

  private:
    void prepare(std::span<const word> words, int n);
    void descend(int level);
    int compare_child(std::size_t content_index, int level, std::uint8_t* out_order, std::uint8_t* out_gid) const;

    int n_ = 0;
    int m_ = 0;
    bool minimize_mode_ = false;
    bool found_less_ = false;
    std::vector<word> ref_;

    std::vector<std::uint64_t> contents_;  // distinct column contents over rows
    std::vector<int> mult_;
    std::vector<int> used_;
    std::vector<word> val_;                         // partial value per row
    std::vector<std::vector<std::uint8_t>> ord_;    // [level][pos] -> row
    std::vector<std::vector<std::uint8_t>> gid_;    // [level][pos] -> tie group
    std::vector<std::vector<std::uint8_t>> child_buf_;  // scratch per (level, child)
};

}  // namespace detail

}  // namespace crcodes
