#pragma once

// The constructive bijection between pairs of restricted two-row tableaux
// (t_lambda, t_mu) with lambda_1 >= mu_1 and Gamma(ell)-restricted
// oscillating tableaux. Level j of the image is
//   [f, g]   = [lambda_1 + mu_1 - j, |lambda_1 - mu_1|]
// starred when the tracked sign s^(j) is -1. The sign at level j is the
// sign of lambda_1 - mu_1 at the last level <= j where they differed
// (+1 if they never have). The inverse reads signs off the star status,
// disambiguating two-row shapes by the next level with != 2 rows.

#include <utility>

#include "tableaux.hpp"

namespace bmwsq {

enum class Ordering { LT, EQ, GT };

inline std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

// Lexicographic comparison of the reversed first-row sequences
// (lambda_1^(m), ..., lambda_1^(1)).
inline Ordering compare(const Tableau2Row& ta, const Tableau2Row& tb) {
    if (ta.length() != tb.length())
        throw ShapeMismatch("tableaux must have equal lengths, got " +
                            std::to_string(ta.length()) + " and " + std::to_string(tb.length()));
    long r1a = 0, r1b = 0;
    std::vector<long> seqa(ta.length()), seqb(tb.length());
    for (long j = 1; j <= ta.length(); ++j) {
        r1a += ta.steps()[j - 1] == 1;
        r1b += tb.steps()[j - 1] == 1;
        seqa[j - 1] = r1a;
        seqb[j - 1] = r1b;
    }
    for (long j = ta.length(); j >= 1; --j) {
        if (seqa[j - 1] != seqb[j - 1])
            return seqa[j - 1] > seqb[j - 1] ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

// Per-level signs s^(j) with their anchor levels m_j: the anchor is the
// last level <= j where the first rows differed (0 when they never have,
// which forces s = +1).
struct SignTrack {
    std::vector<int> signs;    // s^(j), index j = 0..m
    std::vector<long> anchors; // m_j, index j = 0..m, 0 = no anchor
};

inline SignTrack track_signs(const Tableau2Row& tl, const Tableau2Row& tm) {
    if (tl.length() != tm.length())
        throw ShapeMismatch("tableaux must have equal lengths, got " +
                            std::to_string(tl.length()) + " and " + std::to_string(tm.length()));
    SignTrack track;
    track.signs.push_back(1);
    track.anchors.push_back(0);
    long l1 = 0, m1 = 0;
    int sign = 1;
    long anchor = 0;
    for (long j = 1; j <= tl.length(); ++j) {
        l1 += tl.steps()[j - 1] == 1;
        m1 += tm.steps()[j - 1] == 1;
        if (l1 != m1) {
            sign = l1 > m1 ? 1 : -1;
            anchor = j;
        }
        track.signs.push_back(sign);
        track.anchors.push_back(anchor);
    }
    return track;
}

namespace detail {

inline Diagram two_row_shape(long f, long g, int sign) {
    std::vector<long> rows;
    if (f > 0) rows.push_back(f);
    if (g > 0) rows.push_back(g);
    Diagram d(rows);
    if (sign == -1 && g == 0)
        d = (f > 0) ? Diagram{f, 1, 1} : Diagram{1, 1, 1, 1};
    return d;
}

} // namespace detail

inline OscTableau forward(const Tableau2Row& tl, const Tableau2Row& tm, const Level& ell) {
    long m = tl.length();
    SignTrack track = track_signs(tl, tm); // also rejects unequal lengths
    if (!tl.valid_for(ell) || !tm.valid_for(ell))
        throw NotInLambda("input path leaves Lambda(., " + ell.to_string() + ")");
    if (tl.row1_at(m) < tm.row1_at(m))
        throw OrderViolation("first tableau must have the weakly larger first row");

    std::vector<Diagram> shapes;
    shapes.reserve(m + 1);
    shapes.emplace_back();
    long l1 = 0, m1 = 0;
    for (long j = 1; j <= m; ++j) {
        l1 += tl.steps()[j - 1] == 1;
        m1 += tm.steps()[j - 1] == 1;
        long f = l1 + m1 - j;
        long g = l1 > m1 ? l1 - m1 : m1 - l1;
        Diagram nu = detail::two_row_shape(f, g, track.signs[j]);
        if (!in_gamma(nu, ell))
            throw Error("forward image left Gamma(" + ell.to_string() + "): " + nu.to_string());
        if (!adjacent(shapes.back(), nu))
            throw Error("forward image broke adjacency at level " + std::to_string(j));
        shapes.push_back(std::move(nu));
    }
    return OscTableau(std::move(shapes));
}

inline std::pair<Tableau2Row, Tableau2Row> inverse(const OscTableau& o, const Level& ell) {
    if (!o.valid_for(ell))
        throw InvalidOscTableau("tableau leaves Gamma(" + ell.to_string() + ")");
    long m = o.length();

    // Signs from star status, back to front; two-row levels inherit the
    // sign of the next level with fewer or more rows, defaulting to +1.
    std::vector<int> sign(m + 1, 1);
    int carry = 1;
    for (long j = m; j >= 0; --j) {
        size_t rows = o.shape_at(j).row_count();
        if (rows == 2) {
            sign[j] = carry;
        } else {
            sign[j] = rows < 2 ? 1 : -1;
            carry = sign[j];
        }
    }

    std::vector<int> steps_l, steps_m;
    long prev_l1 = 0, prev_m1 = 0;
    for (long j = 1; j <= m; ++j) {
        const Diagram& d = o.shape_at(j);
        long nu1, nu2;
        if (d.row_count() >= 3) { // starred [a] or []
            nu1 = d.row_count() == 4 ? 0 : d.row(0);
            nu2 = 0;
        } else {
            nu1 = d.row(0);
            nu2 = d.row(1);
        }
        long num_l = j + nu1 + sign[j] * nu2;
        long num_m = j + nu1 - sign[j] * nu2;
        if (num_l % 2 != 0 || num_m % 2 != 0)
            throw Error("reconstruction parity failure at level " + std::to_string(j));
        long l1 = num_l / 2, m1 = num_m / 2;
        long dl = l1 - prev_l1, dm = m1 - prev_m1;
        if ((dl != 0 && dl != 1) || (dm != 0 && dm != 1))
            throw Error("reconstruction is not an increasing path at level " + std::to_string(j));
        steps_l.push_back(dl == 1 ? 1 : 2);
        steps_m.push_back(dm == 1 ? 1 : 2);
        prev_l1 = l1;
        prev_m1 = m1;
    }
    Tableau2Row tl{steps_l}, tm{steps_m};
    if (!tl.valid_for(ell) || !tm.valid_for(ell))
        throw Error("reconstructed pair leaves Lambda(., " + ell.to_string() + ")");
    return {tl, tm};
}

} // namespace bmwsq
