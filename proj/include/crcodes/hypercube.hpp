#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/errors.hpp"

namespace crcodes {

// A word packs one vertex of F_2^n: coordinate i (1-based) lives at bit i-1.
// The text rendering is the n-character 0/1 string with coordinate 1 leftmost.
using word = std::uint32_t;

#ifndef CRCODES_MAX_LENGTH
#define CRCODES_MAX_LENGTH 24
#endif
inline constexpr int max_length = CRCODES_MAX_LENGTH;
static_assert(max_length >= 1 && max_length <= 30, "word must hold 2^n vertex indices");

word all_ones(int n);

// Vertex of the binary Hamming graph of length n.
struct Vertex {
    word bits = 0;
    int n = 1;

    Vertex() = default;
    Vertex(word bits_, int n_);

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

int distance(const Vertex& u, const Vertex& v);
int weight(const Vertex& v);
std::vector<int> support(const Vertex& v);  // 1-based coordinate indices

std::string to_string(const Vertex& v);
Vertex parse_vertex(const std::string& line);

// Vertices at distance exactly k from v, each exactly once. The visit order is
// fixed (masks of weight k in increasing integer order), so output is
// deterministic for a given build.
template <class F>
void for_each_at_distance(const Vertex& v, int k, F&& fn) {
    if (k < 0 || k > v.n) throw input_error("sphere radius out of range");
    if (k == 0) {
        fn(v);
        return;
    }
    const word limit = word(1) << v.n;
    word m = (word(1) << k) - 1;
    while (m < limit) {
        fn(Vertex(v.bits ^ m, v.n));
        word low = m & -m;          // Gosper: next mask of equal weight
        word ripple = m + low;
        m = (((m ^ ripple) >> 2) / low) | ripple;
    }
}

std::vector<Vertex> sphere(const Vertex& v, int k);

// Element of Aut(Gamma) = translations x coordinate permutations.
// Action: permute coordinates first, then add the translation mod 2.
struct Automorphism {
    int n = 1;
    word translation = 0;
    std::vector<std::uint8_t> perm;  // perm[i] = image of coordinate i (0-based)

    Automorphism() = default;
    Automorphism(int n_, word translation_, std::vector<std::uint8_t> perm_);

    static Automorphism identity(int n);
};

Vertex apply(const Automorphism& g, const Vertex& v);
Automorphism compose(const Automorphism& g, const Automorphism& h);  // v -> g(h(v))
Automorphism inverse(const Automorphism& g);

// A code: a nonempty set of distinct vertices of common length.
class Code {
  public:
    Code(int n, std::vector<word> words);
    static Code from_vertices(const std::vector<Vertex>& vs);

    int length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<word>& words() const { return words_; }
    bool contains(word w) const;

    // Smallest pairwise distance; absent for a single-word code (never 0).
    std::optional<int> min_distance() const;

    friend bool operator==(const Code&, const Code&) = default;

  private:
    int n_;
    std::vector<word> words_;  // sorted ascending, distinct
};

Code apply_code(const Automorphism& g, const Code& c);
Code translate(const Code& c, word t);
Code repetition_code(int n);

// Uniform random automorphism (Fisher-Yates permutation + uniform translation).
template <class Rng>
Automorphism random_automorphism(int n, Rng& rng) {
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % (i + 1));
        std::swap(perm[i], perm[j]);
    }
    word t = static_cast<word>(rng()) & all_ones(n);
    return Automorphism(n, t, std::move(perm));
}

}  // namespace crcodes
