#include "crcodes/equivalence.hpp"

#include <algorithm>
#include <bit>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace detail {

void PermutationMinimizer::prepare(std::span<const word> words, int n) {
    n_ = n;
    m_ = static_cast<int>(words.size());
    found_less_ = false;

    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < m_; ++r)
            if (words[static_cast<std::size_t>(r)] >> c & 1) cols[static_cast<std::size_t>(c)] |= std::uint64_t(1) << r;
    std::sort(cols.begin(), cols.end());
    contents_.clear();
    mult_.clear();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c && cols[c] == cols[c - 1])
            ++mult_.back();
        else {
            contents_.push_back(cols[c]);
            mult_.push_back(1);
        }
    }
    used_.assign(contents_.size(), 0);
    val_.assign(static_cast<std::size_t>(m_), 0);

    ord_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint8_t>(static_cast<std::size_t>(m_)));
    gid_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint8_t>(static_cast<std::size_t>(m_)));
    for (int r = 0; r < m_; ++r) ord_[0][static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(r);
    std::fill(gid_[0].begin(), gid_[0].end(), 0);
    child_buf_.assign(static_cast<std::size_t>(n) * contents_.size(),
                      std::vector<std::uint8_t>(2 * static_cast<std::size_t>(m_)));
}

// Builds the row order induced by placing this column at the current level's
// position (zeros before ones inside every tie group) and compares the
// resulting sorted partial list against the reference. Returns -1/0/+1.
int PermutationMinimizer::compare_child(std::size_t content_index, int level, std::uint8_t* out_order,
                                        std::uint8_t* out_gid) const {
    const std::uint64_t bits = contents_[content_index];
    const int p = n_ - 1 - level;
    const word high = static_cast<word>(((word(1) << n_) - 1) >> p << p);
    const std::uint8_t* ord = ord_[static_cast<std::size_t>(level)].data();
    const std::uint8_t* gid = gid_[static_cast<std::size_t>(level)].data();

    int cmp = 0;
    int out = 0;
    std::uint8_t next_gid = 0;
    int pos = 0;
    while (pos < m_) {
        int end = pos;
        while (end < m_ && gid[end] == gid[pos]) ++end;
        for (int half = 0; half < 2; ++half) {
            bool emitted = false;
            for (int q = pos; q < end; ++q) {
                const std::uint8_t row = ord[q];
                if (static_cast<int>(bits >> row & 1) != half) continue;
                const word v = val_[row] | (static_cast<word>(half) << p);
                if (cmp == 0) {
                    const word r = ref_[static_cast<std::size_t>(out)] & high;
                    if (v != r) {
                        if (v > r) return 1;
                        cmp = -1;
                    }
                }
                out_order[out] = row;
                out_gid[out] = next_gid;
                ++out;
                emitted = true;
            }
            if (emitted) ++next_gid;
        }
        pos = end;
    }
    return cmp;
}

void PermutationMinimizer::descend(int level) {
    if (found_less_) return;
    if (level == n_) {
        // Order is fully refined; compare exact values against the reference.
        const std::uint8_t* ord = ord_[static_cast<std::size_t>(n_)].data();
        for (int pos = 0; pos < m_; ++pos) {
            const word v = val_[ord[pos]];
            if (v == ref_[static_cast<std::size_t>(pos)]) continue;
            if (v > ref_[static_cast<std::size_t>(pos)]) return;
            if (minimize_mode_) {
                for (int q = 0; q < m_; ++q) ref_[static_cast<std::size_t>(q)] = val_[ord[q]];
            } else {
                found_less_ = true;
            }
            return;
        }
        return;
    }

    const int p = n_ - 1 - level;
    struct Child {
        std::size_t content;
        std::uint8_t* buf;
    };
    Child children[max_length];
    int nchildren = 0;
    std::size_t slot = static_cast<std::size_t>(level) * contents_.size();
    for (std::size_t ci = 0; ci < contents_.size(); ++ci) {
        if (used_[ci] >= mult_[ci]) continue;
        std::uint8_t* buf = child_buf_[slot + ci].data();
        if (compare_child(ci, level, buf, buf + m_) > 0) continue;  // prune
        children[nchildren++] = {ci, buf};
    }

    // Best-first: visit children in increasing order of their partial lists,
    // so the greedy branch lands first and tightens the bound early.
    auto child_values_less = [&](const Child& a, const Child& b) {
        for (int pos = 0; pos < m_; ++pos) {
            const word va = val_[a.buf[pos]] | (static_cast<word>(contents_[a.content] >> a.buf[pos] & 1) << p);
            const word vb = val_[b.buf[pos]] | (static_cast<word>(contents_[b.content] >> b.buf[pos] & 1) << p);
            if (va != vb) return va < vb;
        }
        return false;
    };
    std::sort(children, children + nchildren, child_values_less);

    for (int i = 0; i < nchildren; ++i) {
        if (found_less_) return;
        const Child& ch = children[i];
        // The reference may have tightened since the child was screened.
        if (minimize_mode_ && compare_child(ch.content, level, ord_[static_cast<std::size_t>(level + 1)].data(),
                                            gid_[static_cast<std::size_t>(level + 1)].data()) > 0)
            continue;
        std::copy_n(ch.buf, m_, ord_[static_cast<std::size_t>(level + 1)].data());
        std::copy_n(ch.buf + m_, m_, gid_[static_cast<std::size_t>(level + 1)].data());
        for (std::uint64_t b = contents_[ch.content]; b; b &= b - 1)
            val_[static_cast<std::size_t>(std::countr_zero(b))] |= word(1) << p;
        ++used_[ch.content];
        descend(level + 1);
        --used_[ch.content];
        for (std::uint64_t b = contents_[ch.content]; b; b &= b - 1)
            val_[static_cast<std::size_t>(std::countr_zero(b))] &= ~(word(1) << p);
    }
}

std::vector<word> PermutationMinimizer::minimize(std::span<const word> words, int n, std::vector<word> reference) {
    if (words.size() != reference.size()) throw input_error("minimize: reference size mismatch");
    prepare(words, n);
    ref_ = std::move(reference);
    minimize_mode_ = true;
    descend(0);
    return ref_;
}

bool PermutationMinimizer::is_minimal(std::span<const word> sorted_words, int n) {
    prepare(sorted_words, n);
    ref_.assign(sorted_words.begin(), sorted_words.end());
    minimize_mode_ = false;
    descend(0);
    return !found_less_;
}

}  // namespace detail

Code canonical_form(const Code& c) {
    const int n = c.length();
    if (n > max_canonical_length) throw capacity_error("canonical form: length exceeds the exact canonicalizer bound");
    if (c.size() > max_canonical_size) throw capacity_error("canonical form: code too large for the exact canonicalizer");

    detail::PermutationMinimizer pm;
    const std::vector<word>& ws = c.words();
    std::vector<word> best;
    std::vector<word> t(ws.size());
    for (word beta : ws) {
        for (std::size_t i = 0; i < ws.size(); ++i) t[i] = ws[i] ^ beta;
        std::sort(t.begin(), t.end());
        if (best.empty()) {
            best = pm.minimize(t, n, t);
            continue;
        }
        if (t.size() > 1) {
            // Least achievable second element for this translate: the minimum
            // nonzero weight packed into the low bits.
            int wmin = n;
            for (std::size_t i = 1; i < t.size(); ++i) wmin = std::min(wmin, std::popcount(t[i]));
            if (((word(1) << wmin) - 1) > best[1]) continue;
        }
        best = pm.minimize(t, n, best);
    }
    return Code(n, std::move(best));
}

bool are_equivalent(const Code& a, const Code& b) {
    if (a.length() != b.length()) throw input_error("are_equivalent: length mismatch");
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace crcodes
