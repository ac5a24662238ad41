#include "crcodes/linear.hpp"

#include <algorithm>
#include <bit>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

// In-place mod-2 reduced row echelon form on word-packed rows; pivots are
// chosen at the lowest free coordinate. Returns the pivot column list.
std::vector<int> rref(std::vector<word>& rows, int n) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] >> col & 1)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Basis of the kernel of the row space, one vector per free coordinate,
// itself in RREF with pivots at the free coordinates.
std::vector<word> kernel_basis(const std::vector<word>& rows, const std::vector<int>& pivots, int n) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<word> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        word v = word(1) << f;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r] >> f & 1) v |= word(1) << pivots[r];
        basis.push_back(v);
    }
    return basis;
}

std::vector<word> validate_rows(int n, std::span<const word> rows) {
    if (n < 1) throw input_error("linear code length must be positive");
    if (n > max_length) throw capacity_error("linear code length exceeds build limit");
    if (rows.empty()) throw input_error("no matrix rows given");
    std::vector<word> out(rows.begin(), rows.end());
    for (word r : out)
        if (r >> n) throw input_error("matrix row has bits beyond the length");
    return out;
}

}  // namespace

LinearCode::LinearCode(int n, std::vector<word> gens, std::vector<word> checks)
    : n_(n), k_(static_cast<int>(gens.size())), gens_(std::move(gens)), checks_(std::move(checks)) {}

LinearCode LinearCode::from_parity_check(int n, std::span<const word> rows) {
    std::vector<word> checks = validate_rows(n, rows);
    std::vector<int> pivots = rref(checks, n);
    if (checks.empty()) throw input_error("parity check matrix has rank 0");
    std::vector<word> gens = kernel_basis(checks, pivots, n);
    rref(gens, n);  // normalize so equal codes have equal bases
    return LinearCode(n, std::move(gens), std::move(checks));
}

LinearCode LinearCode::from_generators(int n, std::span<const word> rows) {
    std::vector<word> gens = validate_rows(n, rows);
    std::vector<int> pivots = rref(gens, n);
    std::vector<word> checks = kernel_basis(gens, pivots, n);
    rref(checks, n);
    return LinearCode(n, std::move(gens), std::move(checks));
}

bool LinearCode::contains(word w) const {
    if (w >> n_) return false;
    for (word h : checks_)
        if (std::popcount(h & w) & 1) return false;
    return true;
}

std::vector<word> LinearCode::words() const {
    if (k_ > max_length) throw capacity_error("codeword enumeration too large");
    std::vector<word> out;
    out.reserve(std::size_t(1) << k_);
    word v = 0;
    out.push_back(v);
    // Gray-code walk over message vectors: one generator XOR per step.
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k_); ++i) {
        v ^= gens_[static_cast<std::size_t>(std::countr_zero(i))];
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Code LinearCode::to_code() const { return Code(n_, words()); }

LinearCode LinearCode::dual() const { return LinearCode(n_, checks_, gens_); }

std::vector<std::int64_t> LinearCode::weight_distribution() const {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n_) + 1, 0);
    word v = 0;
    ++dist[0];
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k_); ++i) {
        v ^= gens_[static_cast<std::size_t>(std::countr_zero(i))];
        ++dist[static_cast<std::size_t>(std::popcount(v))];
    }
    return dist;
}

std::optional<int> LinearCode::min_distance() const {
    if (k_ == 0) return std::nullopt;
    int best = n_;
    word v = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k_); ++i) {
        v ^= gens_[static_cast<std::size_t>(std::countr_zero(i))];
        if (v) best = std::min(best, std::popcount(v));
    }
    return best;
}

int LinearCode::external_distance() const {
    const auto dist = dual().weight_distribution();
    int s = 0;
    for (std::size_t w = 1; w < dist.size(); ++w) s += dist[w] != 0;
    return s;
}

LinearCode LinearCode::even_half() const {
    std::vector<word> rows = gens_;
    std::size_t odd = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (std::popcount(rows[i]) & 1) {
            odd = i;
            break;
        }
    if (odd == rows.size()) return *this;  // already all even
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != odd && (std::popcount(rows[i]) & 1)) rows[i] ^= rows[odd];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(odd));
    if (rows.empty()) {
        // k = 1 with an odd generator: the even half is the zero code.
        std::vector<word> checks;
        for (int i = 0; i < n_; ++i) checks.push_back(word(1) << i);
        return LinearCode(n_, {}, std::move(checks));
    }
    return from_generators(n_, rows);
}

const std::array<std::string, 3>& hamming_7_4_check_rows() {
    static const std::array<std::string, 3> rows = {"1001011", "0101110", "0010111"};
    return rows;
}

LinearCode hamming_7_4() {
    std::vector<word> rows;
    for (const std::string& r : hamming_7_4_check_rows()) rows.push_back(parse_vertex(r).bits);
    return LinearCode::from_parity_check(7, rows);
}

}  // namespace crcodes
