#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crcodes/hypercube.hpp"
#include "crcodes/vertexset.hpp"

namespace crcodes {

// Distance partition {C_0, ..., C_rho} of F_2^n by distance from a code.
struct DistancePartition {
    int n = 0;
    std::vector<VertexSet> cells;          // cells[i] = vertices at distance exactly i
    std::vector<std::uint8_t> cell_of;     // 2^n entries, cell index per vertex
    std::vector<std::uint64_t> cell_sizes;

    int rho() const { return static_cast<int>(cells.size()) - 1; }
};

// b[i] = b_i for 0 <= i < rho, c[i] = c_{i+1} for 0 <= i < rho.
// b_rho = c_0 = 0 by convention and are not stored.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    int b_at(int i) const { return i < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(i)] : 0; }
    int c_at(int i) const { return i >= 1 ? c[static_cast<std::size_t>(i - 1)] : 0; }

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Two vertices of the same cell that disagree in their neighbor counts.
struct EquitableWitness {
    int cell = 0;
    word x = 0, y = 0;
    int cx = 0, bx = 0;
    int cy = 0, by = 0;
};

struct EquitableResult {
    std::optional<IntersectionArray> array;
    std::optional<EquitableWitness> witness;

    bool ok() const { return array.has_value(); }
};

// l_{ik} table: row i gives |Gamma_k(v) ∩ C| for vertices v in cell i.
struct OuterDistribution {
    int n = 0;
    std::vector<std::vector<std::int64_t>> table;  // (rho+1) x (n+1)
};

struct OuterWitness {
    int cell = 0, k = 0;
    word nu1 = 0, nu2 = 0;
    std::int64_t count1 = 0, count2 = 0;
};

struct OuterResult {
    std::optional<OuterDistribution> table;
    std::optional<OuterWitness> witness;

    bool ok() const { return table.has_value(); }
};

struct RegularityVerdict {
    bool completely_regular = false;
    std::optional<IntersectionArray> array;
    std::optional<EquitableWitness> witness;
};

// Multi-source BFS over the vertex bit array (production) and the
// definitional per-vertex min-distance scan (reference, kept for testing).
DistancePartition distance_partition(const Code& c);
DistancePartition distance_partition_reference(const Code& c);

int covering_radius(const Code& c);

// Tests cell-wise homogeneity of the (c_i, b_i) neighbor counts. On failure
// the witness pairs the first vertex of the offending cell with the smallest
// disagreeing vertex; both implementations return identical results.
EquitableResult equitable_intersection_array(const DistancePartition& p);
EquitableResult equitable_intersection_array_reference(const DistancePartition& p);

// The definitional l_{ik} constancy check. Costs O(2^n |C|); used by tests
// and the analyze --check-outer path, never by the production verdict.
OuterResult outer_distribution_check(const Code& c, const DistancePartition& p);
OuterResult outer_distribution_check_reference(const Code& c, const DistancePartition& p);

// Production verdict via the equitable-partition criterion.
RegularityVerdict is_completely_regular(const Code& c);

// True iff the last cell C_rho is exactly the all-ones translate 1 + C.
bool antipodal_check(const Code& c, const DistancePartition& p);

}  // namespace crcodes
