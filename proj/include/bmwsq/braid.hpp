#pragma once

// Braid words as signed generator sequences, with the permutation-level
// bookkeeping needed for link invariants: exponent sum and the number of
// components of the closure.

#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace bmwsq {

class BraidWord {
public:
    BraidWord(long strands, std::vector<long> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) throw Error("braid needs at least one strand");
        for (long l : letters_)
            if (l == 0 || std::abs(l) > strands_ - 1)
                throw IndexOutOfRange("generator index " + std::to_string(l) +
                                      " out of range for " + std::to_string(strands_) + " strands");
    }

    long strands() const { return strands_; }
    const std::vector<long>& letters() const { return letters_; }
    long length() const { return static_cast<long>(letters_.size()); }

    long exponent_sum() const {
        long e = 0;
        for (long l : letters_) e += l > 0 ? 1 : -1;
        return e;
    }

    // Underlying permutation of strand positions, bottom to top.
    std::vector<long> permutation() const {
        std::vector<long> perm(strands_);
        std::iota(perm.begin(), perm.end(), 0);
        for (long l : letters_) {
            long i = std::abs(l) - 1;
            std::swap(perm[i], perm[i + 1]);
        }
        return perm;
    }

    long closure_components() const {
        std::vector<long> perm = permutation();
        std::vector<bool> seen(strands_, false);
        long cycles = 0;
        for (long i = 0; i < strands_; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (long j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        return cycles;
    }

    BraidWord conjugated_by(const BraidWord& u) const {
        if (u.strands_ != strands_) throw ShapeMismatch("conjugator strand count differs");
        std::vector<long> w = u.letters_;
        w.insert(w.end(), letters_.begin(), letters_.end());
        for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) w.push_back(-*it);
        return BraidWord(strands_, w);
    }

    BraidWord stabilized(int sign) const {
        std::vector<long> w = letters_;
        w.push_back(sign >= 0 ? strands_ : -strands_);
        return BraidWord(strands_ + 1, w);
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(letters_[i]);
        }
        return s;
    }

    // Whitespace-separated nonzero integers; i is sigma_i, -i its inverse.
    static BraidWord parse(long strands, const std::string& text) {
        std::vector<long> letters;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            try {
                size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                letters.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("braid letter must be a nonzero integer, got '" + tok + "'");
            }
        }
        return BraidWord(strands, letters);
    }

private:
    long strands_;
    std::vector<long> letters_;
};

} // namespace bmwsq
