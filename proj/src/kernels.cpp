#include "crcodes/kernels.hpp"

#include <algorithm>
#include <climits>

#include "crcodes/errors.hpp"

namespace crcodes::kernels {

namespace {

// flip_masks[i] selects the bit positions whose i-th index bit is 0, so
// flipping coordinate i inside a 64-bit block is a masked shift pair.
constexpr std::uint64_t flip_masks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

inline std::uint64_t flip_within(std::uint64_t w, int i) {
    const int s = 1 << i;
    return ((w & flip_masks[i]) << s) | ((w >> s) & flip_masks[i]);
}

// One output block of the neighborhood expansion. XOR by coordinate i is a
// bit shuffle inside the block for i < 6 and a block-index XOR for i >= 6,
// so each output block is a pure gather over n input blocks.
inline std::uint64_t expand_word(const std::uint64_t* in, std::size_t wi, int n) {
    std::uint64_t acc = 0;
    const std::uint64_t self = in[wi];
    const int within = n < 6 ? n : 6;
    for (int i = 0; i < within; ++i) acc |= flip_within(self, i);
    for (int i = 6; i < n; ++i) acc |= in[wi ^ (std::size_t(1) << (i - 6))];
    return acc;
}

}  // namespace

void expand_neighbors(const VertexSet& in, VertexSet& out) {
    if (in.length() != out.length()) throw input_error("expand_neighbors: length mismatch");
    const int n = in.length();
    const std::size_t nw = in.word_count();
    const std::uint64_t* src = in.data();
    std::uint64_t* dst = out.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (nw >= parallel_word_threshold)
#endif
    for (std::ptrdiff_t wi = 0; wi < static_cast<std::ptrdiff_t>(nw); ++wi)
        dst[wi] = expand_word(src, static_cast<std::size_t>(wi), n);
}

void expand_neighbors_reference(const VertexSet& in, VertexSet& out) {
    if (in.length() != out.length()) throw input_error("expand_neighbors: length mismatch");
    out.clear();
    const int n = in.length();
    in.for_each([&](word v) {
        for (int i = 0; i < n; ++i) out.set(v ^ (word(1) << i));
    });
}

std::optional<int> min_pairwise_distance(std::span<const word> words) {
    const std::size_t m = words.size();
    if (m < 2) return std::nullopt;
    if (m > (std::size_t(1) << 17)) throw capacity_error("min distance: code too large for pairwise scan");
    int best = INT_MAX;
    const std::size_t pairs = m * (m - 1) / 2;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best) if (pairs >= parallel_pair_threshold)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m) - 1; ++i) {
        const word wi = words[static_cast<std::size_t>(i)];
        int local = best;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j)
            local = std::min(local, std::popcount(wi ^ words[j]));
        best = std::min(best, local);
    }
    return best;
}

std::optional<int> min_pairwise_distance_reference(std::span<const word> words) {
    if (words.size() < 2) return std::nullopt;
    int best = INT_MAX;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            int d = 0;
            for (word x = words[i] ^ words[j]; x; x &= x - 1) ++d;
            best = std::min(best, d);
        }
    return best;
}

}  // namespace crcodes::kernels
