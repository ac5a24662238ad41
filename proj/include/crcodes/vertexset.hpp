#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "crcodes/errors.hpp"
#include "crcodes/hypercube.hpp"

namespace crcodes {

// Flat bit array over all 2^n vertices of F_2^n, indexed by the vertex word.
// This is the working set type of the breadth-first-search and scan kernels.
class VertexSet {
  public:
    explicit VertexSet(int n) : n_(n) {
        if (n < 1) throw input_error("vertex set length must be positive");
        if (n > max_length) throw capacity_error("vertex set length exceeds build limit");
        bits_.assign(word_count_for(n), 0);
    }

    int length() const { return n_; }
    std::uint64_t universe() const { return std::uint64_t(1) << n_; }

    bool test(word v) const { return bits_[v >> 6] >> (v & 63) & 1; }
    void set(word v) { bits_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(word v) { bits_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t w : bits_) c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (std::uint64_t w : bits_) if (w) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    VertexSet& andnot(const VertexSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t word_count() const { return bits_.size(); }
    std::uint64_t* data() { return bits_.data(); }
    const std::uint64_t* data() const { return bits_.data(); }

    // First member in vertex order; only valid when any() holds.
    word min_vertex() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<word>((i << 6) + static_cast<std::size_t>(std::countr_zero(bits_[i])));
        throw input_error("min_vertex of empty set");
    }

    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            for (std::uint64_t w = bits_[i]; w; w &= w - 1)
                fn(static_cast<word>((i << 6) + static_cast<std::size_t>(std::countr_zero(w))));
    }

    static std::size_t word_count_for(int n) {
        return n >= 6 ? (std::size_t(1) << (n - 6)) : 1;
    }

  private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace crcodes
