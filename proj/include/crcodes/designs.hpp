#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "crcodes/hypercube.hpp"

namespace crcodes {

// Constant-weight codeword class viewed as a set system: blocks are the
// supports, stored as bit masks over the point set {1..n}.
struct BlockSet {
    int n = 1;   // number of points
    int k = 0;   // common block size
    std::vector<word> blocks;  // sorted, distinct, popcount == k

    std::size_t size() const { return blocks.size(); }
};

BlockSet weight_class(const Code& c, int k);

// Two point subsets covered by different numbers of blocks.
struct LambdaWitness {
    word t1 = 0, t2 = 0;
    std::int64_t count1 = 0, count2 = 0;
};

struct LambdaResult {
    std::optional<std::int64_t> lambda;
    std::optional<LambdaWitness> witness;

    bool ok() const { return lambda.has_value(); }
};

// lambda of the t-(n,k,lambda) design if every t-subset of points lies in
// the same number of blocks, else a witness pair of t-subsets.
LambdaResult design_lambda(const BlockSet& b, int t);

// Largest t >= 1 for which design_lambda succeeds, or 0.
int max_strength(const BlockSet& b);

// { |B1 ∩ B2| : B1 != B2 }; needs at least two blocks.
std::set<int> intersection_numbers(const BlockSet& b);

BlockSet complement_design(const BlockSet& b);

// Symmetric design test: number of blocks equals number of points.
bool is_symmetric(const BlockSet& b);

}  // namespace crcodes
