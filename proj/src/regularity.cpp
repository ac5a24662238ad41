#include "crcodes/regularity.hpp"

#include <algorithm>
#include <array>

#include "crcodes/errors.hpp"
#include "crcodes/kernels.hpp"

namespace crcodes {

namespace {

constexpr std::int64_t no_mismatch = -1;

void record_cell(DistancePartition& p, const VertexSet& cell, std::uint8_t level) {
    const std::size_t nw = cell.word_count();
    const std::uint64_t* src = cell.data();
    std::uint8_t* dst = p.cell_of.data();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (nw >= kernels::parallel_word_threshold)
#endif
    for (std::ptrdiff_t wi = 0; wi < static_cast<std::ptrdiff_t>(nw); ++wi)
        for (std::uint64_t bits = src[wi]; bits; bits &= bits - 1)
            dst[(static_cast<std::size_t>(wi) << 6) + static_cast<std::size_t>(std::countr_zero(bits))] = level;
}

// Neighbor counts of v one cell down / one cell up.
inline std::pair<int, int> down_up_counts(const DistancePartition& p, word v) {
    const int i = p.cell_of[v];
    int down = 0, up = 0;
    for (int j = 0; j < p.n; ++j) {
        const int d = p.cell_of[v ^ (word(1) << j)];
        down += d == i - 1;
        up += d == i + 1;
    }
    return {down, up};
}

EquitableResult equitable_from_mismatch(const DistancePartition& p, std::int64_t bad) {
    const int rho = p.rho();
    EquitableResult res;
    if (bad != no_mismatch) {
        const word y = static_cast<word>(bad);
        const int i = p.cell_of[y];
        const word x = p.cells[static_cast<std::size_t>(i)].min_vertex();
        auto [cx, bx] = down_up_counts(p, x);
        auto [cy, by] = down_up_counts(p, y);
        res.witness = EquitableWitness{i, x, y, cx, bx, cy, by};
        return res;
    }
    IntersectionArray arr;
    for (int i = 0; i < rho; ++i) {
        auto [c, b] = down_up_counts(p, p.cells[static_cast<std::size_t>(i)].min_vertex());
        (void)c;
        arr.b.push_back(b);
    }
    for (int i = 1; i <= rho; ++i) {
        auto [c, b] = down_up_counts(p, p.cells[static_cast<std::size_t>(i)].min_vertex());
        (void)b;
        arr.c.push_back(c);
    }
    res.array = std::move(arr);
    return res;
}

std::vector<std::int64_t> distance_histogram(const Code& c, word v) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(c.length()) + 1, 0);
    for (word w : c.words()) ++h[static_cast<std::size_t>(std::popcount(v ^ w))];
    return h;
}

OuterResult outer_from_mismatch(const Code& c, const DistancePartition& p,
                                const std::vector<std::vector<std::int64_t>>& rows, std::int64_t bad) {
    OuterResult res;
    if (bad != no_mismatch) {
        const word nu2 = static_cast<word>(bad);
        const int i = p.cell_of[nu2];
        const word nu1 = p.cells[static_cast<std::size_t>(i)].min_vertex();
        const auto h = distance_histogram(c, nu2);
        for (int k = 0; k <= c.length(); ++k)
            if (h[static_cast<std::size_t>(k)] != rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
                res.witness = OuterWitness{i, k, nu1, nu2, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                           h[static_cast<std::size_t>(k)]};
                return res;
            }
        throw input_error("outer check: inconsistent mismatch");  // unreachable
    }
    res.table = OuterDistribution{c.length(), rows};
    return res;
}

}  // namespace

DistancePartition distance_partition(const Code& c) {
    const int n = c.length();
    DistancePartition p;
    p.n = n;
    p.cell_of.assign(std::size_t(1) << n, 0);

    VertexSet frontier(n);
    for (word w : c.words()) frontier.set(w);
    VertexSet visited = frontier;
    p.cells.push_back(frontier);
    record_cell(p, frontier, 0);

    std::uint64_t seen = visited.count();
    const std::uint64_t all = visited.universe();
    std::uint8_t level = 0;
    VertexSet next(n);
    while (seen < all) {
        ++level;
        kernels::expand_neighbors(frontier, next);
        next.andnot(visited);
        record_cell(p, next, level);
        visited |= next;
        seen += next.count();
        p.cells.push_back(next);
        std::swap(frontier, next);
    }
    for (const VertexSet& cell : p.cells) p.cell_sizes.push_back(cell.count());
    return p;
}

DistancePartition distance_partition_reference(const Code& c) {
    // Definitional: d(v, C) = min over codewords, vertex by vertex.
    const int n = c.length();
    const std::uint64_t all = std::uint64_t(1) << n;
    std::vector<std::uint8_t> dist(all);
    int rho = 0;
    for (std::uint64_t v = 0; v < all; ++v) {
        int best = n + 1;
        for (word w : c.words()) best = std::min(best, std::popcount(static_cast<word>(v) ^ w));
        dist[v] = static_cast<std::uint8_t>(best);
        rho = std::max(rho, best);
    }
    DistancePartition p;
    p.n = n;
    p.cell_of = dist;
    for (int i = 0; i <= rho; ++i) p.cells.emplace_back(n);
    for (std::uint64_t v = 0; v < all; ++v) p.cells[dist[v]].set(static_cast<word>(v));
    for (const VertexSet& cell : p.cells) p.cell_sizes.push_back(cell.count());
    return p;
}

int covering_radius(const Code& c) { return distance_partition(c).rho(); }

EquitableResult equitable_intersection_array(const DistancePartition& p) {
    const int rho = p.rho();
    std::vector<std::array<int, 2>> ref(static_cast<std::size_t>(rho) + 1);
    for (int i = 0; i <= rho; ++i) {
        auto [c, b] = down_up_counts(p, p.cells[static_cast<std::size_t>(i)].min_vertex());
        ref[static_cast<std::size_t>(i)] = {c, b};
    }
    const std::int64_t all = static_cast<std::int64_t>(p.cell_of.size());
    std::int64_t bad = all;  // min reduction over mismatching vertices
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : bad) \
    if (all >= static_cast<std::int64_t>(kernels::parallel_word_threshold << 6))
#endif
    for (std::int64_t v = 0; v < all; ++v) {
        auto [c, b] = down_up_counts(p, static_cast<word>(v));
        const auto& r = ref[p.cell_of[static_cast<std::size_t>(v)]];
        if (c != r[0] || b != r[1]) bad = std::min(bad, v);
    }
    return equitable_from_mismatch(p, bad == all ? no_mismatch : bad);
}

EquitableResult equitable_intersection_array_reference(const DistancePartition& p) {
    const int rho = p.rho();
    std::vector<std::array<int, 2>> ref(static_cast<std::size_t>(rho) + 1);
    for (int i = 0; i <= rho; ++i) {
        auto [c, b] = down_up_counts(p, p.cells[static_cast<std::size_t>(i)].min_vertex());
        ref[static_cast<std::size_t>(i)] = {c, b};
    }
    for (std::uint64_t v = 0; v < p.cell_of.size(); ++v) {
        auto [c, b] = down_up_counts(p, static_cast<word>(v));
        const auto& r = ref[p.cell_of[v]];
        if (c != r[0] || b != r[1]) return equitable_from_mismatch(p, static_cast<std::int64_t>(v));
    }
    return equitable_from_mismatch(p, no_mismatch);
}

OuterResult outer_distribution_check(const Code& c, const DistancePartition& p) {
    if (c.length() != p.n) throw input_error("outer check: length mismatch");
    const std::int64_t all = static_cast<std::int64_t>(p.cell_of.size());
    if (static_cast<std::uint64_t>(all) * c.size() > (std::uint64_t(1) << 33))
        throw capacity_error("outer distribution check too large");

    std::vector<std::vector<std::int64_t>> rows;
    for (const VertexSet& cell : p.cells) rows.push_back(distance_histogram(c, cell.min_vertex()));

    std::int64_t bad = all;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : bad) \
    if (all >= static_cast<std::int64_t>(kernels::parallel_word_threshold << 6))
#endif
    for (std::int64_t v = 0; v < all; ++v) {
        std::array<std::int64_t, max_length + 1> h{};
        for (word w : c.words()) ++h[static_cast<std::size_t>(std::popcount(static_cast<word>(v) ^ w))];
        const auto& row = rows[p.cell_of[static_cast<std::size_t>(v)]];
        for (int k = 0; k <= p.n; ++k)
            if (h[static_cast<std::size_t>(k)] != row[static_cast<std::size_t>(k)]) {
                bad = std::min(bad, v);
                break;
            }
    }
    return outer_from_mismatch(c, p, rows, bad == all ? no_mismatch : bad);
}

OuterResult outer_distribution_check_reference(const Code& c, const DistancePartition& p) {
    if (c.length() != p.n) throw input_error("outer check: length mismatch");
    std::vector<std::vector<std::int64_t>> rows;
    for (const VertexSet& cell : p.cells) rows.push_back(distance_histogram(c, cell.min_vertex()));
    for (std::uint64_t v = 0; v < p.cell_of.size(); ++v) {
        const auto h = distance_histogram(c, static_cast<word>(v));
        if (h != rows[p.cell_of[v]]) return outer_from_mismatch(c, p, rows, static_cast<std::int64_t>(v));
    }
    return outer_from_mismatch(c, p, rows, no_mismatch);
}

RegularityVerdict is_completely_regular(const Code& c) {
    const DistancePartition p = distance_partition(c);
    EquitableResult eq = equitable_intersection_array(p);
    RegularityVerdict v;
    v.completely_regular = eq.ok();
    v.array = std::move(eq.array);
    v.witness = eq.witness;
    return v;
}

bool antipodal_check(const Code& c, const DistancePartition& p) {
    if (c.length() != p.n) throw input_error("antipodal check: length mismatch");
    const VertexSet& last = p.cells.back();
    if (last.count() != c.size()) return false;
    const word ones = all_ones(c.length());
    for (word w : c.words())
        if (!last.test(w ^ ones)) return false;
    return true;
}

}  // namespace crcodes
