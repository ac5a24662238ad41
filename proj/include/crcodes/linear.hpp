#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crcodes/hypercube.hpp"

namespace crcodes {

// Binary linear [n, k] code. Both the generator basis and the parity-check
// basis are kept in reduced row echelon form, so structurally equal codes
// compare equal.
class LinearCode {
  public:
    static LinearCode from_parity_check(int n, std::span<const word> rows);
    static LinearCode from_generators(int n, std::span<const word> rows);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const std::vector<word>& generators() const { return gens_; }
    const std::vector<word>& parity_checks() const { return checks_; }

    bool contains(word w) const;
    std::vector<word> words() const;           // all 2^k codewords, sorted
    Code to_code() const;

    LinearCode dual() const;
    std::vector<std::int64_t> weight_distribution() const;
    std::optional<int> min_distance() const;   // = min nonzero weight; absent for k = 0
    int external_distance() const;             // nonzero weights of the dual
    LinearCode even_half() const;              // subcode of even-weight words

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

  private:
    LinearCode(int n, std::vector<word> gens, std::vector<word> checks);

    int n_ = 1;
    int k_ = 0;
    std::vector<word> gens_;    // k rows, RREF
    std::vector<word> checks_;  // n-k rows, RREF
};

// The [7,4,3] Hamming code fixture, built from its parity check matrix.
LinearCode hamming_7_4();
const std::array<std::string, 3>& hamming_7_4_check_rows();

}  // namespace crcodes
