#pragma once

// The acceptance suite: one runner per criterion, each returning an exact
// pass/fail with a short diagnostic. `quick` trims ranges for a fast smoke
// run; the full configuration is the shipping gate.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "bijection.hpp"
#include "images.hpp"
#include "invariants.hpp"
#include "squares.hpp"

namespace bmwsq {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

inline Int osc_count_or_zero(long m, const Diagram& d, const Level& ell) {
    if (d.size() > m || (m - d.size()) % 2 != 0) return 0;
    return count_osc(m, d, ell);
}

inline std::vector<Level> four_levels() {
    return {Level::inf(), Level::finite(6), Level::finite(7), Level::finite(8)};
}

inline BraidWord random_braid(std::mt19937& rng, long max_strands, long max_len) {
    std::uniform_int_distribution<long> ns(2, max_strands);
    long n = ns(rng);
    std::uniform_int_distribution<long> len(1, max_len);
    std::uniform_int_distribution<long> gen(1, n - 1);
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<long> letters;
    long k = len(rng);
    for (long i = 0; i < k; ++i) {
        long g = gen(rng);
        letters.push_back(flip(rng) ? g : -g);
    }
    return BraidWord(n, letters);
}

// 1. Bijection round trip over the full domains.
inline CriterionResult criterion_roundtrip(bool quick) {
    long max_m = quick ? 7 : 9;
    long pairs = 0, paths = 0, failures = 0;
    for (const Level& ell : {Level::finite(6), Level::finite(7), Level::finite(8), Level::inf()}) {
        for (long m = 1; m <= max_m; ++m) {
            for (const Diagram& lam : lambda_set(m, ell))
                for (const Diagram& mu : lambda_set(m, ell)) {
                    if (lam.row(0) < mu.row(0)) continue;
                    for (const auto& tl : enum_tableaux(lam, ell))
                        for (const auto& tm : enum_tableaux(mu, ell)) {
                            ++pairs;
                            OscTableau o = forward(tl, tm, ell);
                            auto [rl, rm] = inverse(o, ell);
                            if (rl != tl || rm != tm || !o.valid_for(ell)) ++failures;
                        }
                }
            for (const Diagram& nu : gamma_set(ell, m)) {
                if ((m - nu.size()) % 2 != 0) continue;
                for (const OscTableau& o : enum_osc(m, nu, ell)) {
                    ++paths;
                    auto [tl, tm] = inverse(o, ell);
                    if (forward(tl, tm, ell) != o) ++failures;
                }
            }
        }
    }
    std::ostringstream d;
    d << pairs << " pairs and " << paths << " oscillating tableaux, m <= " << max_m
      << ", ell in {6,7,8,inf}, " << failures << " failures";
    return {"bijection round trip", failures == 0, d.str()};
}

// 2. Pair-counting identities, exact integers on both sides.
inline CriterionResult criterion_counts(bool quick) {
    long max_m = quick ? 9 : 12;
    long checked = 0, failures = 0;
    std::vector<Level> levels{Level::finite(6), Level::finite(7), Level::finite(8),
                              Level::finite(9), Level::finite(10), Level::inf()};
    for (const Level& ell : levels)
        for (long m = 1; m <= max_m; ++m)
            for (const Diagram& lam : lambda_set(m, ell))
                for (const Diagram& mu : lambda_set(m, ell)) {
                    long nu1 = lam.row(0) + mu.row(0) - m;
                    long nu2 = std::abs(lam.row(0) - mu.row(0));
                    Int tl = count_tableaux(lam, ell), tm = count_tableaux(mu, ell);
                    ++checked;
                    if (lam != mu) {
                        Diagram nu = nu2 ? Diagram{nu1, nu2} : Diagram{nu1};
                        if (count_osc(m, nu, ell) != tl * tm) ++failures;
                    } else {
                        Diagram sym = nu1 ? Diagram{nu1} : Diagram{};
                        if (count_osc(m, sym, ell) != binomial_int(tl + 1, 2)) ++failures;
                        if (osc_count_or_zero(m, star(sym, ell), ell) != binomial_int(tl, 2))
                            ++failures;
                    }
                }
    std::ostringstream d;
    d << checked << " shape pairs, m <= " << max_m << ", ell in {6..10,inf}, " << failures
      << " failures";
    return {"pair counting identities", failures == 0, d.str()};
}

// 3. Closed forms against the DP counts.
inline CriterionResult criterion_closed_forms(bool) {
    long checked = 0, failures = 0;
    for (const Level& ell : {Level::finite(6), Level::inf()})
        for (long m = 0; m <= 14; ++m)
            for (long p = 0; 2 * p <= m; ++p) {
                Diagram lam = p ? Diagram{m - p, p} : (m ? Diagram{m} : Diagram{});
                if (!in_lambda(lam, m, ell)) continue;
                ++checked;
                if (closed_form_dim(m, p, ell) != count_tableaux(lam, ell)) ++failures;
            }
    std::ostringstream d;
    d << checked << " closed-form values, m <= 14, ell in {6,inf}, " << failures << " failures";
    return {"closed-form dimensions", failures == 0, d.str()};
}

// 4. Temperley-Lieb relation and trace suite.
inline CriterionResult criterion_tl_relations(bool quick) {
    long max_m = quick ? 4 : 6;
    int randoms = quick ? 20 : 100;
    std::ostringstream d;
    bool all = true;
    for (const Level& ell : four_levels()) {
        for (long m = 2; m <= max_m; ++m) {
            auto rep = ell.is_inf() ? tl_relation_report<RationalFunction>(m, ell, randoms)
                                    : tl_relation_report<Cyclotomic>(m, ell, randoms);
            for (auto& [name, ok] : rep)
                if (!ok) {
                    all = false;
                    d << " [" << ell.to_string() << ",m=" << m << "] " << name << " failed;";
                }
        }
    }
    std::ostringstream head;
    head << "all of T1,T2,H,B1,B2,T3-T7,M1-M3 for m <= " << max_m << ", ell in {inf,6,7,8}, "
         << randoms << " random trace elements per size" << d.str();
    return {"TL relation suite", all, head.str()};
}

// 5. Square-realization relation suite plus the negative control.
inline CriterionResult criterion_bmw_relations(bool quick) {
    long max_m = quick ? 4 : 5;
    int randoms = quick ? 3 : 6;
    bool all = true;
    std::ostringstream d;
    for (const Level& ell : four_levels()) {
        for (long m = 2; m <= max_m; ++m) {
            auto rep = ell.is_inf() ? bmw_relation_report<RationalFunction>(m, ell, randoms)
                                    : bmw_relation_report<Cyclotomic>(m, ell, randoms);
            for (auto& [name, ok] : rep)
                if (!ok) {
                    all = false;
                    d << " [" << ell.to_string() << ",m=" << m << "] " << name << " failed;";
                }
        }
    }
    bool control = bmw_negative_control<RationalFunction>(3, Level::inf()) &&
                   bmw_negative_control<Cyclotomic>(3, Level::finite(6));
    if (!control) d << " negative control unexpectedly satisfied the cubic;";
    std::ostringstream head;
    head << "R1,E,R2,B1,B2 and trace axioms for m <= " << max_m
         << ", ell in {inf,6,7,8}; negative control " << (control ? "fails R1 as required" : "BROKEN")
         << d.str();
    return {"square-realization relation suite", all && control, head.str()};
}

// 6. Dimension audit of the isomorphism.
inline CriterionResult criterion_dim_audit(bool quick) {
    long max_m = quick ? 5 : 6;
    bool all = true;
    std::ostringstream d;
    for (const Level& ell : four_levels())
        for (long m = 2; m <= max_m; ++m) {
            DimAudit a = ell.is_inf() ? dim_audit<RationalFunction>(m, ell)
                                      : dim_audit<Cyclotomic>(m, ell);
            if (!a.consistent()) {
                all = false;
                d << " [" << ell.to_string() << ",m=" << m << "] totals " << a.osc_total << "/"
                  << a.formula_total << "/" << a.decomposition_total << ";";
            }
        }
    std::ostringstream head;
    head << "three totals and per-block labels agree for m <= " << max_m
         << ", ell in {inf,6,7,8}" << d.str();
    return {"isomorphism dimension audit", all, head.str()};
}

// 7. Trace-level identity on a random corpus.
inline CriterionResult criterion_lickorish(bool quick) {
    int count = quick ? 50 : 200;
    std::mt19937 rng(1234577);
    long failures = 0;
    std::vector<BraidWord> corpus{BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2, 1, -2})};
    while (static_cast<int>(corpus.size()) < count + 2) corpus.push_back(random_braid(rng, 5, 12));
    for (const BraidWord& w : corpus)
        if (!lickorish_check(w).equal) ++failures;
    std::ostringstream d;
    d << corpus.size() << " braid words (n <= 5, length <= 12, plus trefoil and figure-eight), "
      << failures << " failures";
    return {"trace-level Lickorish identity", failures == 0, d.str()};
}

// 8. Oracle agreement through the documented variable bridge.
inline CriterionResult criterion_oracle(bool quick) {
    int count = quick ? 30 : 40;
    std::mt19937 rng(998877);
    long failures = 0;
    std::vector<BraidWord> corpus{BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2, 1, -2})};
    while (static_cast<int>(corpus.size()) < count) corpus.push_back(random_braid(rng, 5, 10));
    for (const BraidWord& w : corpus) {
        InvariantValue j = jones(w);
        if (bracket_to_jones(bracket_oracle(w), j.components) != j.value) ++failures;
    }
    std::ostringstream d;
    d << corpus.size() << " words with <= 10 crossings, " << failures << " failures";
    return {"bracket oracle agreement", failures == 0, d.str()};
}

// 9. Finite image verification by exact BFS.
inline CriterionResult criterion_finite_images(bool quick) {
    struct Case {
        long m;
        Diagram lambda;
        long ell;
        Int expect;
        bool heavy;
    };
    std::vector<Case> cases{
        {3, Diagram{2, 1}, 10, Int(60), false},
        {4, Diagram{2, 2}, 10, Int(60), false},
        {4, Diagram{}, 10, Int(60), false},
        {3, Diagram{1}, 6, Int(12), false},
        {4, Diagram{1, 1}, 6, Int(108), false},
        {5, Diagram{3, 1, 1}, 6, Int(25920), true},
    };
    bool all = true;
    std::ostringstream d;
    for (const Case& c : cases) {
        if (quick && c.heavy) {
            d << " (" << c.m << "," << c.lambda.to_string() << "," << c.ell << ") skipped in quick mode;";
            continue;
        }
        BfsResult r = enumerate_projective_group(c.m, c.lambda, c.ell, 60000);
        bool ok = !r.hit_cap && r.order == c.expect;
        if (!ok) all = false;
        d << " (" << c.m << "," << c.lambda.to_string() << "," << c.ell << ") expected " << c.expect
          << " found " << r.order << (r.hit_cap ? " (cap)" : "") << (ok ? ";" : " MISMATCH;");
    }
    return {"finite image verification", all, d.str()};
}

// 10. Infinite cases hit the cap; lookup matches the published table on a
// golden set of hand-transcribed triples.
inline CriterionResult criterion_infinite_and_table(bool) {
    bool all = true;
    std::ostringstream d;
    struct Inf {
        long m;
        Diagram lambda;
        long ell;
    };
    for (const Inf& c : {Inf{3, Diagram{2, 1}, 7}, Inf{3, Diagram{1}, 8}, Inf{4, Diagram{2, 1, 1}, 8}}) {
        BfsResult r = enumerate_projective_group(c.m, c.lambda, c.ell, 2000);
        if (!r.hit_cap) {
            all = false;
            d << " (" << c.m << "," << c.lambda.to_string() << "," << c.ell
              << ") expected to exceed the cap but closed at " << r.order << ";";
        }
    }
    long infinite_consistent = 3;

    using Kind = GroupDescriptor::Kind;
    struct Gold {
        long m;
        Diagram lambda;
        long ell;
        Kind kind;
        int case_index;
        long d1, d2;
    };
    std::vector<Gold> golden{
        {5, Diagram{5}, 8, Kind::Trivial, 1, 0, 0},
        {2, Diagram{}, 7, Kind::Trivial, 2, 0, 0},
        {2, Diagram{1, 1}, 9, Kind::Trivial, 2, 0, 0},
        {3, Diagram{1, 1, 1}, 8, Kind::Trivial, 3, 0, 0},
        {4, Diagram{1, 1, 1, 1}, 7, Kind::Trivial, 4, 0, 0},
        {5, Diagram{1}, 6, Kind::PSp, 5, 0, 0},
        {5, Diagram{3, 1, 1}, 6, Kind::PSp, 5, 0, 0},
        {7, Diagram{2, 1}, 6, Kind::PSp, 5, 0, 0},
        {6, Diagram{2}, 6, Kind::PSp, 6, 0, 0},
        {8, Diagram{3, 1}, 6, Kind::PSp, 6, 0, 0},
        {6, Diagram{}, 6, Kind::PSpSemidirect, 7, 0, 0},
        {4, Diagram{1, 1}, 6, Kind::PSpSemidirect, 7, 0, 0},
        {3, Diagram{2, 1}, 10, Kind::A5, 8, 0, 0},
        {3, Diagram{1}, 10, Kind::A5, 8, 0, 0},
        {4, Diagram{2, 2}, 10, Kind::A5, 9, 0, 0},
        {4, Diagram{}, 10, Kind::A5, 9, 0, 0},
        {4, Diagram{1, 1}, 10, Kind::A5xPSU, 10, 3, 0},
        {5, Diagram{3}, 10, Kind::PSU, 11, 4, 0},
        {5, Diagram{1, 1, 1}, 8, Kind::PSU, 12, 5, 0},
        {6, Diagram{1, 1, 1, 1}, 8, Kind::PSU, 13, 5, 0},
        {4, Diagram{3, 1}, 8, Kind::PSUxPSU, 0, 3, 1},
        {6, Diagram{2, 2}, 8, Kind::PSUxPSU, 0, 5, 5},
    };
    long table_ok = 0;
    for (const Gold& g : golden) {
        GroupDescriptor got = classify_image(g.m, g.lambda, g.ell);
        bool ok = got.kind == g.kind && got.case_index == g.case_index &&
                  (g.d1 == 0 || got.d1 == g.d1) && (g.d2 == 0 || got.d2 == g.d2);
        if (ok) {
            ++table_ok;
        } else {
            all = false;
            d << " (" << g.m << "," << g.lambda.to_string() << "," << g.ell << ") lookup gave "
              << got.to_string() << " case " << got.case_index << ";";
        }
    }
    std::ostringstream head;
    head << infinite_consistent
         << " predicted-infinite cases exceed the budget (consistent, not verified); " << table_ok
         << "/" << golden.size() << " golden table lookups match" << d.str();
    return {"infinite-image consistency and table lookup", all, head.str()};
}

} // namespace verify_detail

inline std::vector<CriterionResult> run_acceptance(bool quick, std::ostream* progress = nullptr) {
    using Runner = std::function<CriterionResult(bool)>;
    std::vector<Runner> runners{
        verify_detail::criterion_roundtrip,     verify_detail::criterion_counts,
        verify_detail::criterion_closed_forms,  verify_detail::criterion_tl_relations,
        verify_detail::criterion_bmw_relations, verify_detail::criterion_dim_audit,
        verify_detail::criterion_lickorish,     verify_detail::criterion_oracle,
        verify_detail::criterion_finite_images, verify_detail::criterion_infinite_and_table,
    };
    std::vector<CriterionResult> results;
    for (size_t i = 0; i < runners.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = runners[i](quick);
        } catch (const std::exception& e) {
            r = {"criterion " + std::to_string(i + 1), false, std::string("exception: ") + e.what()};
        }
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count() /
                    1000.0;
        if (progress) {
            (*progress) << (r.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << r.name
                        << ": " << r.detail << " [" << secs << "s]" << std::endl;
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace bmwsq
