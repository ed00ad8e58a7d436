#pragma once

// Restricted Young tableaux (increasing two-row paths in Lambda(., ell)) and
// oscillating tableaux (add-or-remove-a-box paths in Gamma(ell)), with
// counting by level DP and deterministic enumeration. Counts are big
// integers; the unrestricted counts grow at Catalan scale.

#include <functional>
#include <sstream>

#include "diagram.hpp"
#include "numeric.hpp"

namespace bmwsq {

// An increasing path recorded by which row receives the box at each step:
// step digit 1 or 2. "112" is the path [0] -> [1] -> [2] -> [2,1].
class Tableau2Row {
public:
    Tableau2Row() = default;
    explicit Tableau2Row(std::vector<int> steps) : steps_(std::move(steps)) {
        for (int s : steps_)
            if (s != 1 && s != 2) throw Error("tableau steps must be 1 or 2");
    }

    const std::vector<int>& steps() const { return steps_; }
    long length() const { return static_cast<long>(steps_.size()); }

    long row1_at(long j) const { // first-row length after j steps
        long r = 0;
        for (long i = 0; i < j; ++i) r += steps_[i] == 1;
        return r;
    }
    Diagram shape_at(long j) const {
        long r1 = row1_at(j);
        long r2 = j - r1;
        std::vector<long> rows;
        if (r1 > 0) rows.push_back(r1);
        if (r2 > 0) rows.push_back(r2);
        return Diagram(rows);
    }
    Diagram shape() const { return shape_at(length()); }

    bool valid_for(const Level& ell) const {
        long r1 = 0;
        for (long j = 1; j <= length(); ++j) {
            r1 += steps_[j - 1] == 1;
            long diff = 2 * r1 - j;
            if (diff < 0 || !ell.row_diff_ok(diff)) return false;
        }
        return true;
    }

    bool operator==(const Tableau2Row& o) const { return steps_ == o.steps_; }
    bool operator!=(const Tableau2Row& o) const { return steps_ != o.steps_; }
    bool operator<(const Tableau2Row& o) const { return steps_ < o.steps_; }

    std::string to_string() const {
        std::string s;
        for (int st : steps_) s += static_cast<char>('0' + st);
        return s;
    }
    static Tableau2Row parse(const std::string& text) {
        std::vector<int> steps;
        for (char c : text) {
            if (std::isspace((unsigned char)c)) continue;
            if (c != '1' && c != '2')
                throw ParseError("tableau step string may only contain 1 and 2, got '" + text + "'");
            steps.push_back(c - '0');
        }
        return Tableau2Row(steps);
    }

private:
    std::vector<int> steps_;
};

// A path in Young's lattice changing by one box per step, stored as the
// full shape list nu^(0) = [], nu^(1), ..., nu^(m).
class OscTableau {
public:
    OscTableau() : shapes_{Diagram{}} {}
    explicit OscTableau(std::vector<Diagram> shapes) : shapes_(std::move(shapes)) {
        if (shapes_.empty() || shapes_.front() != Diagram{})
            throw InvalidOscTableau("oscillating tableau must start at []");
        for (size_t j = 1; j < shapes_.size(); ++j)
            if (!adjacent(shapes_[j - 1], shapes_[j]))
                throw InvalidOscTableau("shapes " + shapes_[j - 1].to_string() + " and " +
                                        shapes_[j].to_string() + " are not adjacent");
    }

    const std::vector<Diagram>& shapes() const { return shapes_; }
    long length() const { return static_cast<long>(shapes_.size()) - 1; }
    const Diagram& shape_at(long j) const { return shapes_[j]; }
    const Diagram& shape() const { return shapes_.back(); }

    bool valid_for(const Level& ell) const {
        for (const Diagram& d : shapes_)
            if (!in_gamma(d, ell)) return false;
        return true;
    }

    bool operator==(const OscTableau& o) const { return shapes_ == o.shapes_; }
    bool operator!=(const OscTableau& o) const { return shapes_ != o.shapes_; }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < shapes_.size(); ++i) {
            if (i) s += ";";
            s += shapes_[i].to_string();
        }
        return s;
    }
    static OscTableau parse(const std::string& text) {
        std::vector<Diagram> shapes;
        std::string part;
        std::istringstream in(text);
        while (std::getline(in, part, ';')) shapes.push_back(Diagram::parse(part));
        try {
            return OscTableau(shapes);
        } catch (const InvalidOscTableau& e) {
            throw ParseError(std::string(e.what()) + " in '" + text + "'");
        }
    }

private:
    std::vector<Diagram> shapes_;
};

namespace detail {
inline void require_lambda(const Diagram& d, const Level& ell) {
    if (!in_lambda(d, d.size(), ell))
        throw NotInLambda(d.to_string() + " is not in Lambda(" + std::to_string(d.size()) +
                          ", " + ell.to_string() + ")");
}
inline void require_gamma_parity(long m, const Diagram& d, const Level& ell) {
    if (!in_gamma(d, ell))
        throw NotInGamma(d.to_string() + " is not in Gamma(" + ell.to_string() + ")");
    long slack = m - d.size();
    if (slack < 0 || slack % 2 != 0)
        throw ParityViolation("m - |shape| must be non-negative and even, got m=" +
                              std::to_string(m) + ", |shape|=" + std::to_string(d.size()));
}
} // namespace detail

// |T_ell(lambda)| by DP on the first-row length, level by level.
inline Int count_tableaux(const Diagram& lambda, const Level& ell) {
    detail::require_lambda(lambda, ell);
    long m = lambda.size();
    long l1 = lambda.row(0), l2 = lambda.row(1);
    std::map<long, Int> cur{{0, Int(1)}}; // first-row length -> path count
    for (long j = 1; j <= m; ++j) {
        std::map<long, Int> next;
        for (auto& [r1, cnt] : cur) {
            for (long nr1 : {r1 + 1, r1}) {
                long nr2 = j - nr1;
                long diff = nr1 - nr2;
                if (nr1 > l1 || nr2 > l2 || diff < 0 || !ell.row_diff_ok(diff)) continue;
                next[nr1] += cnt;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(l1);
    return it == cur.end() ? Int(0) : it->second;
}

// All of T_ell(lambda) in lexicographic step-string order.
inline std::vector<Tableau2Row> enum_tableaux(const Diagram& lambda, const Level& ell) {
    detail::require_lambda(lambda, ell);
    long m = lambda.size();
    long l1 = lambda.row(0), l2 = lambda.row(1);
    std::vector<Tableau2Row> out;
    std::vector<int> steps;
    std::function<void(long, long)> dfs = [&](long j, long r1) {
        if (j == m) {
            if (r1 == l1) out.emplace_back(steps);
            return;
        }
        for (int s : {1, 2}) {
            long nr1 = r1 + (s == 1);
            long nr2 = (j + 1) - nr1;
            long diff = nr1 - nr2;
            if (nr1 > l1 || nr2 > l2 || diff < 0 || !ell.row_diff_ok(diff)) continue;
            steps.push_back(s);
            dfs(j + 1, nr1);
            steps.pop_back();
        }
    };
    dfs(0, 0);
    return out;
}

// |O_ell(m, lambda)| by DP over the Gamma(ell) levels.
inline Int count_osc(long m, const Diagram& lambda, const Level& ell) {
    detail::require_gamma_parity(m, lambda, ell);
    std::map<Diagram, Int> cur{{Diagram{}, Int(1)}};
    for (long j = 1; j <= m; ++j) {
        std::map<Diagram, Int> next;
        for (auto& [d, cnt] : cur)
            for (const Diagram& nb : neighbors(d))
                if (in_gamma(nb, ell)) next[nb] += cnt;
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? Int(0) : it->second;
}

// All of O_ell(m, lambda), depth-first with box removals before additions
// and row-lex order within each kind.
inline std::vector<OscTableau> enum_osc(long m, const Diagram& lambda, const Level& ell) {
    detail::require_gamma_parity(m, lambda, ell);
    std::vector<OscTableau> out;
    std::vector<Diagram> path{Diagram{}};
    std::function<void(long)> dfs = [&](long j) {
        if (j == m) {
            if (path.back() == lambda) out.emplace_back(path);
            return;
        }
        std::vector<Diagram> kids;
        for (const Diagram& nb : neighbors(path.back()))
            if (in_gamma(nb, ell)) kids.push_back(nb);
        std::sort(kids.begin(), kids.end(), [](const Diagram& a, const Diagram& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        for (const Diagram& k : kids) {
            // Must still be able to reach lambda in the remaining steps.
            long dist = std::abs(k.size() - lambda.size());
            long rem = m - (j + 1);
            if (dist > rem || (rem - dist) % 2 != 0) continue;
            path.push_back(k);
            dfs(j + 1);
            path.pop_back();
        }
    };
    dfs(0);
    return out;
}

// Closed-form tableau counts: the binomial difference at ell=inf and the
// power-of-three ladder at ell=6.
inline Int closed_form_dim(long m, long p, const Level& ell) {
    Diagram lambda = (p > 0) ? Diagram{m - p, p} : (m > 0 ? Diagram{m} : Diagram{});
    detail::require_lambda(lambda, ell);
    if (ell.is_inf()) return binomial(m, p) - binomial(m, p - 1);
    if (ell.value() == 6) {
        long d = m - 2 * p;
        Int pw = ipow(3, static_cast<unsigned long>((m - 1) / 2));
        if (d == 0 || d == 1) return (pw + 1) / 2;
        if (d == 2) return pw;
        if (d == 3 || d == 4) return (pw - 1) / 2;
        throw NotInLambda("row difference " + std::to_string(d) + " out of range at ell=6");
    }
    throw UnsupportedLevel("closed forms are available for ell=6 and ell=inf only");
}

} // namespace bmwsq
