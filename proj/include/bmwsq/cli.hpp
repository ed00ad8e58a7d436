#pragma once

// Command-line front end. One binary, subcommand style, no configuration
// file; every result is fully determined by the flags. Exit codes: 0 on
// success, 1 when a verification ran and failed, 2 on usage errors.

#include <CLI11.hpp>

#include "bijection.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace bmwsq::cli {

namespace detail {

// Scalar text forms: rational functions in q (generic) or cyclotomic
// z-polynomials (specialized); both reuse the monomial grammar.
inline std::string scalar_text(const RationalFunction& f) { return f.to_string(); }
inline std::string scalar_text(const Cyclotomic& c) { return c.to_string(); }

struct Output {
    std::ostream& out;
    bool json_mode;

    void emit(const json& j, const std::string& text) {
        if (json_mode)
            out << j.dump(2) << "\n";
        else
            out << text << "\n";
    }
};

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Temperley-Lieb path models, their symmetric squares, restricted tableau "
                 "combinatorics, braid-closure invariants, and projective image enumeration"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit JSON instead of text");

    int exit_code = 0;
    std::string ell_s = "inf", shape_s, shape2_s, t1_s, t2_s, osc_s, word_s;
    long m = 0, j_level = 0, strands = 2, cap = 16;
    long budget = 200000;
    if (const char* env = std::getenv("BMWSQ_BUDGET")) budget = std::atol(env);

    auto output = [&] { return detail::Output{out, json_mode}; };

    // ---- yd ----------------------------------------------------------
    auto* yd = app.add_subcommand("yd", "Young diagram queries");
    yd->require_subcommand(1);

    auto* yd_lambda = yd->add_subcommand("lambda", "two-row label set membership");
    yd_lambda->add_option("--shape", shape_s)->required();
    yd_lambda->add_option("--j", j_level, "diagram size")->required();
    yd_lambda->add_option("--ell", ell_s);
    yd_lambda->callback([&] {
        bool v = in_lambda(Diagram::parse(shape_s), j_level, Level::parse(ell_s));
        output().emit(json{{"member", v}}, v ? "true" : "false");
    });

    auto* yd_gamma = yd->add_subcommand("gamma", "four-column label set membership");
    yd_gamma->add_option("--shape", shape_s)->required();
    yd_gamma->add_option("--ell", ell_s);
    yd_gamma->callback([&] {
        bool v = in_gamma(Diagram::parse(shape_s), Level::parse(ell_s));
        output().emit(json{{"member", v}}, v ? "true" : "false");
    });

    auto* yd_star = yd->add_subcommand("star", "first-column reflection");
    yd_star->add_option("--shape", shape_s)->required();
    yd_star->add_option("--ell", ell_s);
    yd_star->callback([&] {
        Diagram v = star(Diagram::parse(shape_s), Level::parse(ell_s));
        output().emit(json{{"star", v.to_string()}}, v.to_string());
    });

    auto* yd_pred = yd->add_subcommand("pred", "previous-level predecessor set");
    yd_pred->add_option("--m", m)->required();
    yd_pred->add_option("--shape", shape_s)->required();
    yd_pred->add_option("--ell", ell_s);
    yd_pred->callback([&] {
        auto set = predecessors(m, Diagram::parse(shape_s), Level::parse(ell_s));
        std::string text;
        json arr = json::array();
        for (const Diagram& d : set) {
            if (!text.empty()) text += ";";
            text += d.to_string();
            arr.push_back(d.to_string());
        }
        output().emit(json{{"predecessors", arr}}, text.empty() ? "(empty)" : text);
    });

    auto* yd_adj = yd->add_subcommand("adjacent", "single-box adjacency");
    yd_adj->add_option("--shape", shape_s)->required();
    yd_adj->add_option("--shape2", shape2_s)->required();
    yd_adj->callback([&] {
        bool v = adjacent(Diagram::parse(shape_s), Diagram::parse(shape2_s));
        output().emit(json{{"adjacent", v}}, v ? "true" : "false");
    });

    // ---- tab ---------------------------------------------------------
    auto* tab = app.add_subcommand("tab", "restricted two-row tableaux");
    tab->require_subcommand(1);

    auto* tab_count = tab->add_subcommand("count", "number of restricted tableaux");
    tab_count->add_option("--shape", shape_s)->required();
    tab_count->add_option("--ell", ell_s);
    tab_count->callback([&] {
        Int c = count_tableaux(Diagram::parse(shape_s), Level::parse(ell_s));
        output().emit(json{{"count", c.str()}}, c.str());
    });

    auto* tab_enum = tab->add_subcommand("enum", "list restricted tableaux");
    tab_enum->add_option("--shape", shape_s)->required();
    tab_enum->add_option("--ell", ell_s);
    tab_enum->callback([&] {
        auto all = enum_tableaux(Diagram::parse(shape_s), Level::parse(ell_s));
        std::string text;
        json arr = json::array();
        for (const auto& t : all) {
            text += t.to_string();
            text += "\n";
            arr.push_back(t.to_string());
        }
        if (!text.empty()) text.pop_back();
        output().emit(json{{"tableaux", arr}}, text);
    });

    // ---- osc ---------------------------------------------------------
    auto* osc = app.add_subcommand("osc", "restricted oscillating tableaux");
    osc->require_subcommand(1);
    long length = 0;

    auto* osc_count = osc->add_subcommand("count", "number of oscillating tableaux");
    osc_count->add_option("--length", length)->required();
    osc_count->add_option("--shape", shape_s)->required();
    osc_count->add_option("--ell", ell_s);
    osc_count->callback([&] {
        Int c = count_osc(length, Diagram::parse(shape_s), Level::parse(ell_s));
        output().emit(json{{"count", c.str()}}, c.str());
    });

    auto* osc_enum = osc->add_subcommand("enum", "list oscillating tableaux");
    osc_enum->add_option("--length", length)->required();
    osc_enum->add_option("--shape", shape_s)->required();
    osc_enum->add_option("--ell", ell_s);
    osc_enum->callback([&] {
        auto all = enum_osc(length, Diagram::parse(shape_s), Level::parse(ell_s));
        std::string text;
        json arr = json::array();
        for (const auto& o : all) {
            text += o.to_string();
            text += "\n";
            arr.push_back(o.to_string());
        }
        if (!text.empty()) text.pop_back();
        output().emit(json{{"tableaux", arr}}, text);
    });

    // ---- bij ---------------------------------------------------------
    auto* bij = app.add_subcommand("bij", "tableau-pair / oscillating-tableau bijection");
    bij->require_subcommand(1);

    auto* bij_fwd = bij->add_subcommand("forward", "pair of tableaux to oscillating tableau");
    bij_fwd->add_option("--ell", ell_s);
    bij_fwd->add_option("--t1", t1_s)->required();
    bij_fwd->add_option("--t2", t2_s)->required();
    bij_fwd->callback([&] {
        OscTableau o =
            forward(Tableau2Row::parse(t1_s), Tableau2Row::parse(t2_s), Level::parse(ell_s));
        output().emit(json{{"osc", o.to_string()}}, o.to_string());
    });

    auto* bij_inv = bij->add_subcommand("inverse", "oscillating tableau to pair of tableaux");
    bij_inv->add_option("--ell", ell_s);
    bij_inv->add_option("--osc", osc_s)->required();
    bij_inv->callback([&] {
        auto [tl, tm] = inverse(OscTableau::parse(osc_s), Level::parse(ell_s));
        output().emit(json{{"t1", tl.to_string()}, {"t2", tm.to_string()}},
                      tl.to_string() + "\n" + tm.to_string());
    });

    auto* bij_cmp = bij->add_subcommand("compare", "reversed first-row lexicographic order");
    bij_cmp->add_option("--t1", t1_s)->required();
    bij_cmp->add_option("--t2", t2_s)->required();
    bij_cmp->callback([&] {
        Ordering o = compare(Tableau2Row::parse(t1_s), Tableau2Row::parse(t2_s));
        output().emit(json{{"order", to_string(o)}}, to_string(o));
    });

    // ---- tl ----------------------------------------------------------
    auto* tl = app.add_subcommand("tl", "Temperley-Lieb path model");
    tl->require_subcommand(1);

    auto* tl_trace = tl->add_subcommand("trace", "Markov trace of a braid word");
    tl_trace->add_option("--strands", strands)->required();
    tl_trace->add_option("--word", word_s)->required();
    tl_trace->add_option("--ell", ell_s);
    tl_trace->callback([&] {
        BraidWord w = BraidWord::parse(strands, word_s);
        Level ell = Level::parse(ell_s);
        if (ell.is_inf()) {
            auto model = get_path_model<RationalFunction>(strands, ell);
            RationalFunction t = model->markov_trace(model->represent(w));
            output().emit(json{{"trace", to_json(t)}}, detail::scalar_text(t));
        } else {
            auto model = get_path_model<Cyclotomic>(strands, ell);
            Cyclotomic t = model->markov_trace(model->represent(w));
            output().emit(json{{"trace", to_json(t)}}, detail::scalar_text(t));
        }
    });

    auto* tl_verify = tl->add_subcommand("verify", "relation and trace-axiom report");
    tl_verify->add_option("--m", m)->required();
    tl_verify->add_option("--ell", ell_s);
    tl_verify->callback([&] {
        Level ell = Level::parse(ell_s);
        auto rep = ell.is_inf() ? tl_relation_report<RationalFunction>(m, ell)
                                : tl_relation_report<Cyclotomic>(m, ell);
        std::string text;
        bool all = true;
        for (auto& [name, ok] : rep) {
            text += name + (ok ? " pass\n" : " FAIL\n");
            all = all && ok;
        }
        text.pop_back();
        output().emit(report_to_json(rep), text);
        if (!all) exit_code = 1;
    });

    // ---- square ------------------------------------------------------
    auto* square = app.add_subcommand("square", "symmetric-square realization");
    square->require_subcommand(1);

    auto* sq_audit = square->add_subcommand("audit", "dimension audit of the decomposition");
    sq_audit->add_option("--m", m)->required();
    sq_audit->add_option("--ell", ell_s);
    sq_audit->callback([&] {
        Level ell = Level::parse(ell_s);
        DimAudit a = ell.is_inf() ? dim_audit<RationalFunction>(m, ell)
                                  : dim_audit<Cyclotomic>(m, ell);
        std::ostringstream text;
        text << "oscillating total:   " << a.osc_total << "\n"
             << "block formula total: " << a.formula_total << "\n"
             << "decomposition total: " << a.decomposition_total << "\n";
        for (auto& r : a.rows)
            text << "  " << r.nu.to_string() << "  source " << r.source << "  dim " << r.dim_block
                 << "  paths " << r.dim_osc << "\n";
        text << (a.consistent() ? "consistent" : "INCONSISTENT");
        output().emit(to_json(a), text.str());
        if (!a.consistent()) exit_code = 1;
    });

    auto* sq_verify = square->add_subcommand("verify", "relation and trace-axiom report");
    sq_verify->add_option("--m", m)->required();
    sq_verify->add_option("--ell", ell_s);
    sq_verify->callback([&] {
        Level ell = Level::parse(ell_s);
        auto rep = ell.is_inf() ? bmw_relation_report<RationalFunction>(m, ell)
                                : bmw_relation_report<Cyclotomic>(m, ell);
        std::string text;
        bool all = true;
        for (auto& [name, ok] : rep) {
            text += name + (ok ? " pass\n" : " FAIL\n");
            all = all && ok;
        }
        text.pop_back();
        output().emit(report_to_json(rep), text);
        if (!all) exit_code = 1;
    });

    // ---- invariants ----------------------------------------------------
    auto add_invariant = [&](const char* name, const char* help, auto compute) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--strands", strands)->required();
        cmd->add_option("--word", word_s)->required();
        cmd->callback([&, compute] {
            BraidWord w = BraidWord::parse(strands, word_s);
            InvariantValue v = compute(w);
            json j{{"value", to_json(v.value)},
                   {"strands", v.strands},
                   {"exponent_sum", v.exponent_sum},
                   {"components", v.components},
                   {"word", w.to_string()}};
            output().emit(j, v.value.to_string());
        });
        return cmd;
    };
    add_invariant("jones", "Jones polynomial of the braid closure",
                  [](const BraidWord& w) { return jones(w); });
    add_invariant("kauffman", "Kauffman-polynomial specialization at r = q^3",
                  [](const BraidWord& w) { return kauffman_special(w); });

    auto* lick = app.add_subcommand("lickorish", "trace-level identity K = J^2");
    lick->add_option("--strands", strands)->required();
    lick->add_option("--word", word_s)->required();
    lick->callback([&] {
        BraidWord w = BraidWord::parse(strands, word_s);
        LickorishResult r = lickorish_check(w);
        json j{{"kauffman", to_json(r.lhs.value)},
               {"jones_squared", to_json(r.rhs.value)},
               {"equal", r.equal},
               {"components", r.components}};
        std::ostringstream text;
        text << "kauffman:      " << r.lhs.value.to_string() << "\n"
             << "jones squared: " << r.rhs.value.to_string() << "\n"
             << (r.equal ? "equal" : "NOT EQUAL");
        output().emit(j, text.str());
        if (!r.equal) exit_code = 1;
    });

    auto* oracle = app.add_subcommand("oracle", "Kauffman-bracket state sum (variable A)");
    oracle->add_option("--strands", strands)->required();
    oracle->add_option("--word", word_s)->required();
    oracle->add_option("--cap", cap, "crossing cap");
    oracle->callback([&] {
        BraidWord w = BraidWord::parse(strands, word_s);
        LaurentPoly b = bracket_oracle(w, cap);
        std::string text = b.to_string();
        for (auto& ch : text)
            if (ch == 'q') ch = 'A';
        output().emit(json{{"value", to_json(b)}, {"variable", "A"}}, text);
    });

    // ---- image ---------------------------------------------------------
    auto* image = app.add_subcommand("image", "projective braid image classification");
    image->require_subcommand(1);
    long ell_int = 6;

    auto* img_classify = image->add_subcommand("classify", "published table lookup");
    img_classify->add_option("--m", m)->required();
    img_classify->add_option("--shape", shape_s)->required();
    img_classify->add_option("--ell", ell_int)->required();
    img_classify->callback([&] {
        GroupDescriptor g = classify_image(m, Diagram::parse(shape_s), ell_int);
        std::ostringstream text;
        text << g.to_string() << " (case " << g.case_index << ", order "
             << (g.order ? g.order->str() : std::string("infinite")) << ")";
        output().emit(to_json(g), text.str());
    });

    auto* img_verify = image->add_subcommand("verify", "exact projective closure enumeration");
    img_verify->add_option("--m", m)->required();
    img_verify->add_option("--shape", shape_s)->required();
    img_verify->add_option("--ell", ell_int)->required();
    img_verify->add_option("--budget", budget, "element cap (env BMWSQ_BUDGET)");
    img_verify->callback([&] {
        Diagram lambda = Diagram::parse(shape_s);
        GroupDescriptor g = classify_image(m, lambda, ell_int);
        BfsResult r = enumerate_projective_group(m, lambda, ell_int, budget);
        std::string verdict;
        if (g.order && !r.hit_cap)
            verdict = (r.order == *g.order) ? "verified" : "mismatch";
        else if (!g.order && r.hit_cap)
            verdict = "consistent";
        else if (!g.order && !r.hit_cap)
            verdict = "mismatch";
        else
            verdict = "inconclusive";
        json j{{"order", r.order.str()},
               {"hit_cap", r.hit_cap},
               {"predicted", to_json(g)},
               {"verdict", verdict}};
        std::ostringstream text;
        text << "found " << r.order << (r.hit_cap ? "+ (cap reached)" : "") << ", predicted "
             << (g.order ? g.order->str() : std::string("infinite")) << ": " << verdict;
        output().emit(j, text.str());
        if (verdict == "mismatch") exit_code = 1;
    });

    // ---- verify-all ------------------------------------------------------
    auto* vall = app.add_subcommand("verify-all", "run the acceptance criteria");
    bool quick = false;
    vall->add_flag("--quick", quick, "reduced ranges, finishes in under a minute");
    vall->callback([&] {
        std::vector<CriterionResult> results;
        if (json_mode) {
            results = run_acceptance(quick, nullptr);
            json arr = json::array();
            bool all = true;
            for (auto& r : results) {
                arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                all = all && r.pass;
            }
            out << json{{"criteria", arr}, {"all_pass", all}}.dump(2) << "\n";
            if (!all) exit_code = 1;
        } else {
            results = run_acceptance(quick, &out);
            for (auto& r : results)
                if (!r.pass) exit_code = 1;
        }
    });

    // CLI11 wants argv-style reversed input.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cout, std::cerr);
}

} // namespace bmwsq::cli
