#pragma once

// Young diagrams by weakly decreasing row lists, the restricted label sets
// Lambda(j, ell) (two rows, row difference <= ell-2) and Gamma(ell) (first
// two column lengths summing to <= 4, first two rows summing to <= ell-2,
// plus the adjoined diagram [ell-2,1,1]), the star reflection on Gamma, and
// single-box adjacency.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bmwsq {

class Level {
public:
    static Level inf() { return Level(kInf); }
    static Level finite(long v) {
        if (v < 3) throw LevelTooSmall("level must be >= 3, got " + std::to_string(v));
        return Level(v);
    }
    static Level parse(const std::string& s) {
        if (s == "inf" || s == "INF") return inf();
        try {
            size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return finite(v);
        } catch (const LevelTooSmall&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("level must be an integer >= 3 or 'inf', got '" + s + "'");
        }
    }

    bool is_inf() const { return v_ == kInf; }
    long value() const { return v_; } // pre: finite

    // ell - 2 as a bound that is never hit when ell = inf.
    bool row_diff_ok(long diff) const { return is_inf() || diff <= v_ - 2; }

    bool operator==(const Level& o) const { return v_ == o.v_; }
    bool operator!=(const Level& o) const { return v_ != o.v_; }

    std::string to_string() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    static constexpr long kInf = -1;
    explicit Level(long v) : v_(v) {}
    long v_;
};

class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<long> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
                throw Error("rows must be weakly decreasing positive integers");
        }
    }
    Diagram(std::initializer_list<long> rows) : Diagram(std::vector<long>(rows)) {}

    const std::vector<long>& rows() const { return rows_; }
    size_t row_count() const { return rows_.size(); }
    long row(size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
    long size() const {
        long s = 0;
        for (long r : rows_) s += r;
        return s;
    }
    // Column length: number of rows with at least i+1 boxes.
    long col(size_t i) const {
        long c = 0;
        for (long r : rows_)
            if (r > static_cast<long>(i)) ++c;
        return c;
    }

    bool operator==(const Diagram& o) const { return rows_ == o.rows_; }
    bool operator!=(const Diagram& o) const { return rows_ != o.rows_; }
    // Row-lexicographic order; the canonical sort order everywhere.
    bool operator<(const Diagram& o) const { return rows_ < o.rows_; }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + "]";
    }

    static Diagram parse(const std::string& text) {
        size_t i = 0;
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
        if (i >= text.size() || text[i] != '[')
            throw ParseError("diagram must look like [a,b,...], got '" + text + "'");
        ++i;
        std::vector<long> rows;
        std::string cur;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (std::isspace((unsigned char)c)) continue;
            if (c == ',' || c == ']') {
                if (!cur.empty()) {
                    rows.push_back(std::stol(cur));
                    cur.clear();
                } else if (c == ',') {
                    throw ParseError("empty entry in diagram '" + text + "'");
                }
                if (c == ']') {
                    for (++i; i < text.size(); ++i)
                        if (!std::isspace((unsigned char)text[i]))
                            throw ParseError("trailing input after diagram '" + text + "'");
                    try {
                        return Diagram(rows);
                    } catch (const Error& e) {
                        throw ParseError(std::string(e.what()) + " in '" + text + "'");
                    }
                }
            } else if (std::isdigit((unsigned char)c)) {
                cur += c;
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in diagram '" + text + "'");
            }
        }
        throw ParseError("missing ']' in diagram '" + text + "'");
    }

private:
    std::vector<long> rows_;
};

// d = [j-p, p] for some p with 0 <= j-2p <= ell-2.
inline bool in_lambda(const Diagram& d, long j, const Level& ell) {
    if (d.size() != j || d.row_count() > 2) return false;
    long diff = d.row(0) - d.row(1);
    return diff >= 0 && ell.row_diff_ok(diff);
}

inline bool in_gamma(const Diagram& d, const Level& ell) {
    if (!ell.is_inf() && ell.value() < 6)
        throw LevelTooSmall("Gamma membership requires ell >= 6");
    if (!ell.is_inf() && d.row_count() == 3 && d.row(0) == ell.value() - 2 && d.row(1) == 1 &&
        d.row(2) == 1)
        return true; // the adjoined diagram [ell-2,1,1]
    if (d.col(0) + d.col(1) > 4) return false;
    return ell.is_inf() || d.row(0) + d.row(1) <= ell.value() - 2;
}

// Reflection on Gamma(ell): the first column length goes to 4 minus itself,
// all other columns unchanged. On the shapes Gamma contains this reads:
// [] <-> [1,1,1,1], [a] <-> [a,1,1] for a > 0, [a,b] fixed for b > 0.
inline Diagram star(const Diagram& d, const Level& ell) {
    if (!in_gamma(d, ell)) throw NotInGamma("star requires a diagram in Gamma, got " + d.to_string());
    switch (d.row_count()) {
        case 0: return Diagram{1, 1, 1, 1};
        case 1: return Diagram{d.row(0), 1, 1};
        case 2: return d;
        case 3: return Diagram{d.row(0)};
        default: return Diagram{};
    }
}

// One diagram is the other plus a single box.
inline bool adjacent(const Diagram& a, const Diagram& b) {
    const Diagram *small = &a, *big = &b;
    if (a.size() > b.size()) std::swap(small, big);
    if (big->size() - small->size() != 1) return false;
    size_t diffs = 0;
    size_t nrows = std::max(a.row_count(), b.row_count());
    for (size_t i = 0; i < nrows; ++i) {
        long d = big->row(i) - small->row(i);
        if (d < 0) return false;
        diffs += d;
    }
    return diffs == 1;
}

// All valid diagrams obtained from d by adding or removing one box.
inline std::vector<Diagram> neighbors(const Diagram& d) {
    std::vector<Diagram> out;
    size_t n = d.row_count();
    for (size_t i = 0; i <= n; ++i) { // add a box to row i (possibly new row)
        std::vector<long> rows(d.rows());
        if (i == n) rows.push_back(1);
        else rows[i] += 1;
        if (i == 0 || rows[i] <= rows[i - 1]) out.emplace_back(rows);
    }
    for (size_t i = 0; i < n; ++i) { // remove a box from row i
        std::vector<long> rows(d.rows());
        rows[i] -= 1;
        if (i + 1 == n || rows[i] >= rows[i + 1]) out.emplace_back(rows);
    }
    return out;
}

// Level m-1 predecessors of d: Gamma(ell) diagrams one box away from d
// whose size has the parity of m-1 and fits below it.
inline std::set<Diagram> predecessors(long m, const Diagram& d, const Level& ell) {
    if (!in_gamma(d, ell)) throw NotInGamma("predecessors requires a diagram in Gamma, got " + d.to_string());
    long slack = m - d.size();
    if (slack < 0 || slack % 2 != 0)
        throw ParityViolation("m - |d| must be a non-negative even integer, got m=" +
                              std::to_string(m) + ", |d|=" + std::to_string(d.size()));
    std::set<Diagram> out;
    for (const Diagram& nb : neighbors(d)) {
        long rem = (m - 1) - nb.size();
        if (rem < 0 || rem % 2 != 0) continue;
        if (!in_gamma(nb, ell)) continue;
        out.insert(nb);
    }
    return out;
}

// Lambda(m, ell) in row-lex order.
inline std::vector<Diagram> lambda_set(long m, const Level& ell) {
    std::vector<Diagram> out;
    for (long p = 0; 2 * p <= m; ++p) {
        long diff = m - 2 * p;
        if (!ell.row_diff_ok(diff)) continue;
        std::vector<long> rows;
        if (m - p > 0) rows.push_back(m - p);
        if (p > 0) rows.push_back(p);
        out.emplace_back(rows);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Gamma(ell) in row-lex order. Finite ell enumerates the whole set; ell=inf
// enumerates the members of size <= max_size (the set itself is infinite).
inline std::vector<Diagram> gamma_set(const Level& ell, long max_size = -1) {
    if (!ell.is_inf() && ell.value() < 6)
        throw LevelTooSmall("Gamma requires ell >= 6");
    if (ell.is_inf() && max_size < 0)
        throw Error("gamma_set at ell=inf needs a size bound");
    long bound = ell.is_inf() ? max_size : (ell.value() - 2) + 2; // rows <= ell-2, +special
    std::vector<Diagram> out;
    // Shapes with first two column lengths summing to <= 4: [], [a], [a,b],
    // [a,1,1], [1,1,1,1]; plus the adjoined [ell-2,1,1].
    auto push = [&](std::vector<long> rows) {
        Diagram d(rows);
        if (max_size >= 0 && d.size() > max_size) return;
        if (in_gamma(d, ell)) out.push_back(d);
    };
    push({});
    for (long a = 1; a <= bound; ++a) push({a});
    for (long a = 1; a <= bound; ++a)
        for (long b = 1; b <= a; ++b) push({a, b});
    for (long a = 1; a <= bound; ++a) push({a, 1, 1});
    push({1, 1, 1, 1});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace bmwsq
