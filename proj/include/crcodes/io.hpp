#pragma once

#include <iosfwd>
#include <string>

#include "crcodes/classify.hpp"
#include "crcodes/hypercube.hpp"

namespace crcodes {

// Code file format: one vertex per line as a 0/1 string, coordinate 1
// leftmost. Lines starting with '#' and blank lines are ignored. All data
// lines must have equal length, which defines n.
Code parse_code(std::istream& in, const std::string& name);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c);

struct AnalyzeOptions {
    bool check_outer = false;  // also run the definitional l_{ik} check
};

// Line-oriented `key: value` report of every invariant the toolkit computes
// for one code: metric data, regularity, and per-weight-class design data.
void render_analysis(std::ostream& out, const Code& c, const AnalyzeOptions& opts = {});

// The [7,4] Hamming code walkthrough: parity check matrix, codewords, weight
// distribution, even half and its full analysis.
void render_demo_hamming7(std::ostream& out);

void render_classification(std::ostream& out, const ClassificationReport& rep);

}  // namespace crcodes
