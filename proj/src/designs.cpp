#include "crcodes/designs.hpp"

#include <algorithm>
#include <bit>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

void check_blockset(const BlockSet& b) {
    if (b.n < 1 || b.n > max_length) throw input_error("block set point count out of range");
    if (b.k < 0 || b.k > b.n) throw input_error("block size out of range");
    for (word blk : b.blocks)
        if (std::popcount(blk) != b.k || (blk >> b.n)) throw input_error("malformed block");
}

// Lexicographic iteration over all t-subsets of {0..n-1} as masks.
template <class F>
void for_each_subset_mask(int n, int t, F&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        word m = 0;
        for (int i : idx) m |= word(1) << i;
        if (!fn(m)) return;
        int pos = t - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - t + pos) --pos;
        if (pos < 0) return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < t; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

BlockSet weight_class(const Code& c, int k) {
    if (k < 0 || k > c.length()) throw input_error("weight class out of range");
    BlockSet b;
    b.n = c.length();
    b.k = k;
    for (word w : c.words())
        if (std::popcount(w) == k) b.blocks.push_back(w);
    return b;
}

LambdaResult design_lambda(const BlockSet& b, int t) {
    check_blockset(b);
    if (b.k == 0 || b.k == b.n) throw input_error("degenerate block size for a design question");
    if (t < 1 || t > b.k) throw input_error("design strength out of range");
    LambdaResult res;
    std::int64_t lambda = -1;
    word first = 0;
    for_each_subset_mask(b.n, t, [&](word tm) {
        std::int64_t count = 0;
        for (word blk : b.blocks) count += (blk & tm) == tm;
        if (lambda < 0) {
            lambda = count;
            first = tm;
            return true;
        }
        if (count != lambda) {
            res.witness = LambdaWitness{first, tm, lambda, count};
            return false;
        }
        return true;
    });
    if (res.witness) return res;
    // Constant coverage of zero (only possible with no blocks) is not a
    // design: lambda must be positive.
    if (lambda > 0) res.lambda = lambda;
    (void)first;
    return res;
}

int max_strength(const BlockSet& b) {
    check_blockset(b);
    if (b.blocks.empty()) throw input_error("max_strength of an empty block set");
    int best = 0;
    for (int t = 1; t <= b.k; ++t) {
        if (!design_lambda(b, t).ok()) break;  // strength is downward closed
        best = t;
    }
    return best;
}

std::set<int> intersection_numbers(const BlockSet& b) {
    check_blockset(b);
    if (b.blocks.size() < 2) throw input_error("intersection numbers need at least two blocks");
    std::set<int> nums;
    for (std::size_t i = 0; i < b.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < b.blocks.size(); ++j)
            nums.insert(std::popcount(b.blocks[i] & b.blocks[j]));
    return nums;
}

BlockSet complement_design(const BlockSet& b) {
    check_blockset(b);
    BlockSet out;
    out.n = b.n;
    out.k = b.n - b.k;
    const word ones = all_ones(b.n);
    for (word blk : b.blocks) out.blocks.push_back(blk ^ ones);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

bool is_symmetric(const BlockSet& b) {
    check_blockset(b);
    return b.blocks.size() == static_cast<std::size_t>(b.n);
}

}  // namespace crcodes
