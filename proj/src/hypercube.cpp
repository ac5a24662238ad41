#include "crcodes/hypercube.hpp"

#include <algorithm>

#include "crcodes/kernels.hpp"

namespace crcodes {

word all_ones(int n) {
    if (n < 1 || n > max_length) throw input_error("length out of range");
    return (word(1) << n) - 1;
}

Vertex::Vertex(word bits_, int n_) : bits(bits_), n(n_) {
    if (n < 1) throw input_error("vertex length must be positive");
    if (n > max_length) throw capacity_error("vertex length exceeds build limit");
    if (bits >> n) throw input_error("vertex has bits beyond its length");
}

int distance(const Vertex& u, const Vertex& v) {
    if (u.n != v.n) throw input_error("distance: length mismatch");
    return std::popcount(u.bits ^ v.bits);
}

int weight(const Vertex& v) { return std::popcount(v.bits); }

std::vector<int> support(const Vertex& v) {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(weight(v)));
    for (word b = v.bits; b; b &= b - 1) s.push_back(std::countr_zero(b) + 1);
    return s;
}

std::string to_string(const Vertex& v) {
    std::string s(static_cast<std::size_t>(v.n), '0');
    for (int i = 0; i < v.n; ++i)
        if (v.bits >> i & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Vertex parse_vertex(const std::string& line) {
    if (line.empty()) throw input_error("empty vertex string");
    if (line.size() > static_cast<std::size_t>(max_length))
        throw capacity_error("vertex string exceeds build limit");
    word bits = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '1')
            bits |= word(1) << i;
        else if (line[i] != '0')
            throw input_error("vertex string has a character other than 0/1");
    }
    return Vertex(bits, static_cast<int>(line.size()));
}

std::vector<Vertex> sphere(const Vertex& v, int k) {
    std::vector<Vertex> out;
    for_each_at_distance(v, k, [&](const Vertex& u) { out.push_back(u); });
    return out;
}

namespace {

word permute_bits(word bits, const std::vector<std::uint8_t>& perm) {
    word out = 0;
    for (word b = bits; b; b &= b - 1) out |= word(1) << perm[static_cast<std::size_t>(std::countr_zero(b))];
    return out;
}

}  // namespace

Automorphism::Automorphism(int n_, word translation_, std::vector<std::uint8_t> perm_)
    : n(n_), translation(translation_), perm(std::move(perm_)) {
    if (n < 1 || n > max_length) throw input_error("automorphism length out of range");
    if (translation >> n) throw input_error("translation has bits beyond the length");
    if (perm.size() != static_cast<std::size_t>(n)) throw input_error("permutation size mismatch");
    word seen = 0;
    for (std::uint8_t p : perm) {
        if (p >= n) throw input_error("permutation image out of range");
        seen |= word(1) << p;
    }
    if (seen != all_ones(n)) throw input_error("permutation is not a bijection");
}

Automorphism Automorphism::identity(int n) {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return Automorphism(n, 0, std::move(perm));
}

Vertex apply(const Automorphism& g, const Vertex& v) {
    if (g.n != v.n) throw input_error("apply: length mismatch");
    return Vertex(permute_bits(v.bits, g.perm) ^ g.translation, v.n);
}

Automorphism compose(const Automorphism& g, const Automorphism& h) {
    if (g.n != h.n) throw input_error("compose: length mismatch");
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<std::size_t>(i)] = g.perm[h.perm[static_cast<std::size_t>(i)]];
    word t = permute_bits(h.translation, g.perm) ^ g.translation;
    return Automorphism(g.n, t, std::move(perm));
}

Automorphism inverse(const Automorphism& g) {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[g.perm[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    word t = permute_bits(g.translation, perm);
    return Automorphism(g.n, t, std::move(perm));
}

Code::Code(int n, std::vector<word> words) : n_(n), words_(std::move(words)) {
    if (n_ < 1) throw input_error("code length must be positive");
    if (n_ > max_length) throw capacity_error("code length exceeds build limit");
    if (words_.empty()) throw input_error("code must be nonempty");
    std::sort(words_.begin(), words_.end());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] >> n_) throw input_error("codeword has bits beyond the length");
        if (i > 0 && words_[i] == words_[i - 1]) throw input_error("duplicate codeword");
    }
}

Code Code::from_vertices(const std::vector<Vertex>& vs) {
    if (vs.empty()) throw input_error("code must be nonempty");
    std::vector<word> ws;
    ws.reserve(vs.size());
    for (const Vertex& v : vs) {
        if (v.n != vs.front().n) throw input_error("codewords of mixed length");
        ws.push_back(v.bits);
    }
    return Code(vs.front().n, std::move(ws));
}

bool Code::contains(word w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::optional<int> Code::min_distance() const { return kernels::min_pairwise_distance(words_); }

Code apply_code(const Automorphism& g, const Code& c) {
    if (g.n != c.length()) throw input_error("apply_code: length mismatch");
    std::vector<word> ws;
    ws.reserve(c.size());
    for (word w : c.words()) ws.push_back(apply(g, Vertex(w, c.length())).bits);
    return Code(c.length(), std::move(ws));
}

Code translate(const Code& c, word t) {
    if (t >> c.length()) throw input_error("translate: translation out of range");
    std::vector<word> ws;
    ws.reserve(c.size());
    for (word w : c.words()) ws.push_back(w ^ t);
    return Code(c.length(), std::move(ws));
}

Code repetition_code(int n) { return Code(n, {0, all_ones(n)}); }

}  // namespace crcodes
