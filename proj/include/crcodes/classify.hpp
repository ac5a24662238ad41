#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/hypercube.hpp"
#include "crcodes/regularity.hpp"

namespace crcodes {

// Exhaustive search is sized so one regularity check stays cheap and the
// candidate graph fits comfortably in memory.
inline constexpr int max_classify_length = 13;

// Smallest admissible minimum distance for the large-distance regime:
// the least integer delta with delta > max{2, n/2}.
int default_delta_min(int n);

struct EnumerationStats {
    std::uint64_t cliques_visited = 0;   // nodes of the pruned clique tree
    std::uint64_t perm_classes = 0;      // distinct up to coordinate permutation
    std::uint64_t candidate_classes = 0; // distinct up to full equivalence
};

// Streams every code with 0 in C, |C| >= 2 and minimum distance >= delta_min,
// exactly once up to equivalence, as its canonical form. Candidates are the
// cliques of the compatibility graph on words of weight >= delta_min (edges:
// distance >= delta_min) joined with {0}; the clique tree is pruned to
// permutation-canonical nodes and the survivors deduplicated by canonical
// form. Return false from the callback to stop early.
EnumerationStats enumerate_candidates(int n, int delta_min, const std::function<bool(const Code&)>& yield);

struct CandidateClass {
    Code code;  // canonical form
    int delta = 0;
    int rho = 0;
    IntersectionArray array;
};

struct ClassificationReport {
    int n = 0;
    int delta_min = 0;
    bool theorem_regime = false;  // delta_min is the default for this n
    std::vector<CandidateClass> classes;  // completely regular survivors
    std::vector<Code> expected;           // prediction, canonical forms (theorem regime only)
    std::vector<Code> missing;
    std::vector<Code> unexpected;
    bool pass = false;
    std::string note;
    EnumerationStats stats;
};

// Enumerates candidates, filters by complete regularity, groups by canonical
// form and (in the default regime) compares against the known classification:
// the repetition code for every n >= 3, plus the even half of the [7,4]
// Hamming code exactly at n = 7.
ClassificationReport classify_large_distance(int n, std::optional<int> delta_min = std::nullopt, int jobs = 0);

// classify_large_distance at the default minimum distance; pass iff the
// survivor classes match the prediction exactly.
ClassificationReport verify_theorem(int n, int jobs = 0);

}  // namespace crcodes
