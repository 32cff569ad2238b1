#pragma once

#include "satedge/config.hpp"
#include "satedge/constructions.hpp"
#include "satedge/formulas.hpp"
#include "satedge/io.hpp"
#include "satedge/packing.hpp"
#include "satedge/saturation.hpp"
#include "satedge/search.hpp"
#include "satedge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

// Command-line front end. Kept in a header so tests can drive it in-process.
namespace satedge::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, budget = 3 };

namespace detail {

struct Common {
    std::string config_path;
    std::optional<unsigned> threads;
    std::optional<std::size_t> vertex_cap;
    Config cfg;

    unsigned thread_count() const { return threads ? *threads : cfg.threads.value_or(0); }
};

inline Graph read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_graph(in);
    std::ifstream file(path);
    if (!file) throw invalid_argument("cannot open input file " + path);
    return read_graph(file);
}

inline void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Parses argv, runs one subcommand and returns the process exit code. Results go to `out`,
/// diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Clique-saturating edge toolkit: constructions, counts, packings, search and checks"};
    app.name("satedge");
    app.require_subcommand(1);
    app.fallthrough();
    detail::Common common;
    app.add_option("--config", common.config_path, "key = value settings file")->check(CLI::ExistingFile);
    app.add_option("--threads", common.threads, "worker threads (default: config, then SATEDGE_THREADS, then all cores)")
        ->check(CLI::Range(1u, 4096u));
    app.add_option("--vertex-cap", common.vertex_cap, "largest graph order accepted")->check(CLI::PositiveNumber);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named graph");
    std::string kind, construct_format = "graph6";
    int cp = 0;
    std::uint64_t cx = 1, cy = 0, cn = 0;
    bool trim_to_jump = false;
    construct->add_option("kind", kind, "h0 | h1 | h2 | turan | base")
        ->required()
        ->check(CLI::IsMember({"h0", "h1", "h2", "turan", "base"}));
    construct->add_option("--p", cp, "clique parameter p (turan builds T_{p-1}(n))")->required();
    construct->add_option("--x", cx, "scale x");
    construct->add_option("--y", cy, "offset y");
    construct->add_option("--n", cn, "order (turan only)");
    construct->add_flag("--trim-to-jump", trim_to_jump, "h2 only: delete U-edges down to ex(n,K_p)+1 edges");
    construct->add_option("--format", construct_format, "graph6 | edgelist | json")
        ->check(CLI::IsMember({"graph6", "edgelist", "json"}));

    // count
    auto* count = app.add_subcommand("count", "count K_p-saturating non-edges");
    int count_p = 0;
    std::string count_in = "-";
    bool count_edges = false;
    std::optional<std::string> count_format;
    count->add_option("--p", count_p, "clique size p of the saturated family")->required()->check(CLI::Range(2, 1 << 20));
    count->add_option("--in", count_in, "graph file, '-' for stdin (graph6 or 'n m' edge list)");
    count->add_flag("--edges", count_edges, "also list the saturating pairs");
    count->add_option("--format", count_format, "json | text")->check(CLI::IsMember({"json", "text"}));

    // pack
    auto* pack = app.add_subcommand("pack", "maximum vertex-disjoint p-clique packing");
    int pack_p = 0;
    std::string pack_in = "-";
    bool no_refine = false, pack_analyze = false, pack_certify = false;
    std::optional<std::uint64_t> pack_budget;
    pack->add_option("--p", pack_p, "clique size")->required()->check(CLI::Range(1, 1 << 20));
    pack->add_option("--in", pack_in, "graph file, '-' for stdin");
    pack->add_flag("--no-refine", no_refine, "skip the switch refinement");
    pack->add_flag("--analyze", pack_analyze, "add the partition data of every packed clique");
    pack->add_flag("--certify", pack_certify, "check the remainder against every maximum packing");
    pack->add_option("--budget", pack_budget, "search node budget");

    // search
    auto* search = app.add_subcommand("search", "exhaustive minimum of the saturating count");
    int sn = 0, sp = 0;
    std::optional<std::uint64_t> se, search_budget;
    bool jump = false, constrained = false, no_witnesses = false, emit_witnesses = false;
    search->add_option("--n", sn, "order")->required()->check(CLI::NonNegativeNumber);
    search->add_option("--p", sp, "forbidden clique K_p (with --jump/--constrained: count K_{p+1})")->required();
    auto* e_opt = search->add_option("--e", se, "edge count");
    auto* jump_opt = search->add_flag("--jump", jump, "use e = ex(n,K_p)+1 and count K_{p+1}-saturating pairs");
    auto* constrained_opt = search->add_flag("--constrained", constrained, "K_{p+1}-free, e = ex(n,K_p), T_{p-1}(n) excluded");
    e_opt->excludes(jump_opt)->excludes(constrained_opt);
    jump_opt->excludes(constrained_opt);
    search->add_option("--budget", search_budget, "node budget");
    auto* emit_opt = search->add_flag("--emit-witnesses", emit_witnesses, "list witnesses (default from config)");
    search->add_flag("--no-witnesses", no_witnesses, "omit witnesses")->excludes(emit_opt);

    // formulas
    auto* formulas_cmd = app.add_subcommand("formulas", "exact closed forms");
    std::string action;
    std::int64_t p_max = 0, fn = 0, fp = 0;
    std::string fr, formulas_format = "csv";
    formulas_cmd->add_option("action", action, "table | eval | sweep")->required()->check(CLI::IsMember({"table", "eval", "sweep"}));
    formulas_cmd->add_option("--p-max", p_max, "largest p (table default 10, sweep default 10000)")->check(CLI::Range(3, 10'000'000));
    formulas_cmd->add_option("--n", fn, "order (eval)");
    formulas_cmd->add_option("--p", fp, "p (eval)");
    formulas_cmd->add_option("--r", fr, "packing density r as a/b (eval)");
    formulas_cmd->add_option("--format", formulas_format, "table output: csv | json")->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run the check harness");
    std::string section = "all", verify_in;
    bool full = false, small = false, no_timing = false;
    std::uint64_t seed = 20240601;
    int verify_p = 3;
    std::size_t trials = 100;
    std::optional<std::string> verify_format;
    verify->add_option("section", section, "all | constructions | packing | formulas | jump | reduction")
        ->check(CLI::IsMember({"all", "constructions", "packing", "formulas", "jump", "reduction"}));
    auto* full_opt = verify->add_flag("--full", full, "full parameter ranges");
    verify->add_flag("--small", small, "desk-scale ranges (default)")->excludes(full_opt);
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--in", verify_in, "graph for packing/reduction ('-' for stdin)");
    verify->add_option("--p", verify_p, "p for packing/reduction on --in");
    verify->add_option("--trials", trials, "sampled switches per graph");
    verify->add_option("--format", verify_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--no-timing", no_timing, "omit elapsed times (byte-stable output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return ok;
        }
        app.exit(e, out, err);
        return usage;
    }
    try {
        if (!common.config_path.empty()) common.cfg = load_config(common.config_path);
        set_vertex_cap(common.vertex_cap ? *common.vertex_cap : common.cfg.vertex_cap);
        const unsigned threads = common.thread_count();
        const Config& cfg = common.cfg;

        if (*construct) {
            Blowup blowup;
            std::string name = kind;
            if (kind == "turan") {
                if (cp < 2) throw invalid_argument("turan needs --p >= 2");
                blowup = turan_blowup(static_cast<std::size_t>(cn), cp - 1);
            } else if (kind == "base") {
                BlowupSpec spec{base_graph(cp), std::vector<std::size_t>(static_cast<std::size_t>(2 * cp - 1), 1), base_graph_names(cp)};
                blowup = blow_up(std::move(spec));
            } else {
                Construction c = kind == "h0" ? h0(cp, cx) : kind == "h1" ? h1(cp, cx, cy) : h2(cp, cx, cy);
                blowup = std::move(c.blowup);
            }
            if (trim_to_jump) {
                if (kind != "h2") throw invalid_argument("--trim-to-jump applies to h2 only");
                auto t = trim_to_target(blowup.graph, blowup.parts, turan_number(blowup.graph.order(), cp) + 1, cp);
                blowup.graph = std::move(t.graph);
            }
            const Graph& g = blowup.graph;
            if (construct_format == "graph6") {
                out << graph6_encode(g) << "\n";
            } else if (construct_format == "edgelist") {
                out << edge_list_encode(g);
            } else {
                nlohmann::ordered_json j;
                j["kind"] = name;
                j["p"] = cp;
                if (kind != "turan" && kind != "base") {
                    j["x"] = cx;
                    j["y"] = cy;
                }
                j["n"] = g.order();
                j["e"] = g.size();
                auto parts = nlohmann::ordered_json::array();
                for (const auto& part : blowup.parts) parts.push_back({{"name", part.name}, {"begin", part.begin}, {"end", part.end}});
                j["parts"] = parts;
                j["graph6"] = graph6_encode(g);
                detail::print_json(out, j);
            }
            return ok;
        }

        if (*count) {
            Graph g = detail::read_input(count_in, in);
            SaturationOptions so;
            so.threads = threads;
            so.materialize_edges = count_edges;
            auto report = count_saturating(g, count_p, so);
            const bool text = count_format ? *count_format == "text" : cfg.format == OutputFormat::text;
            if (text)
                out << report.total << "\n";
            else
                detail::print_json(out, to_json(report));
            return ok;
        }

        if (*pack) {
            Graph g = detail::read_input(pack_in, in);
            PackingOptions po;
            po.node_budget = pack_budget.value_or(cfg.packing_budget);
            CliquePacking packing = max_packing(g, pack_p, po);
            if (!no_refine) packing = refine_packing(g, packing);
            nlohmann::ordered_json j = to_json(packing);
            j["remainder_edges"] = remainder_edges(g, packing);
            if (pack_certify) {
                auto cert = certify_condition_ii(g, packing, po);
                j["condition_ii"] = {{"certified", cert.certified},
                                     {"maximum_packings", cert.maximum_packings},
                                     {"best_remainder_edges", cert.best_remainder_edges}};
            }
            if (pack_analyze) {
                EllSplit split = ell_split(g, packing);
                j["ell1"] = split.ell1;
                j["ell2"] = split.ell2;
                auto arr = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < packing.size(); ++i) {
                    auto a = analyze(g, packing, i, split);
                    nlohmann::ordered_json aj;
                    aj["clique"] = a.R;
                    auto z = nlohmann::ordered_json::array();
                    for (const auto& zj : a.Z) z.push_back(zj.count());
                    aj["z_counts"] = z;
                    auto as = nlohmann::ordered_json::array();
                    for (const auto& ai : a.A) as.push_back(ai.to_vector());
                    aj["A"] = as;
                    aj["z_partition"] = a.z_sum_holds;
                    aj["a_mass"] = a.a_mass_holds;
                    aj["a_sets_independent"] = a.a_sets_valid;
                    aj["a_pairs_saturating"] = a.a_pairs_saturating;
                    aj["edges_to_remainder"] = clique_to_remainder_edges(g, packing, i);
                    arr.push_back(aj);
                }
                j["analysis"] = arr;
            }
            detail::print_json(out, j);
            return ok;
        }

        if (*search) {
            SearchOptions so;
            so.budget = search_budget.value_or(cfg.search_budget);
            so.threads = threads;
            so.emit_witnesses = no_witnesses ? false : (emit_witnesses ? true : cfg.emit_witnesses);
            SearchResult r;
            if (jump)
                r = min_saturating_at_jump(sn, sp, so);
            else if (constrained)
                r = min_saturating_constrained(sn, sp, so);
            else if (se)
                r = min_saturating(sn, *se, sp, so);
            else
                throw invalid_argument("search needs one of --e, --jump or --constrained");
            detail::print_json(out, to_json(r));
            if (!r.exact) {
                err << "search incomplete: " << r.note << "\n";
                return budget;
            }
            return ok;
        }

        if (*formulas_cmd) {
            if (action == "table") {
                const std::int64_t top = p_max ? p_max : 10;
                auto rows = nlohmann::ordered_json::array();
                for (std::int64_t p = 3; p <= top; ++p) {
                    auto b = formulas::g_p_bracket(0, p);
                    nlohmann::ordered_json row;
                    row["p"] = p;
                    row["modulus"] = construction_modulus(static_cast<int>(p));
                    row["main_term"] = to_string(formulas::main_term(p));
                    row["linear_term"] = to_string(formulas::linear_term(p));
                    row["bracket_lower"] = to_string(b.lower_coeff);
                    row["bracket_upper"] = to_string(b.upper_coeff);
                    row["ell1_threshold"] = to_string(formulas::ell1_threshold(p));
                    row["ell2_threshold"] = to_string(formulas::ell2_threshold(p));
                    row["f"] = to_string(formulas::positivity_f(Rational(p)));
                    row["g"] = to_string(formulas::positivity_g(Rational(p)));
                    rows.push_back(row);
                }
                if (formulas_format == "json") {
                    detail::print_json(out, rows);
                } else {
                    bool header = true;
                    for (const auto& row : rows) {
                        if (header) {
                            bool first = true;
                            for (const auto& [k, v] : row.items()) out << (first ? "" : ",") << k, first = false;
                            out << "\n";
                            header = false;
                        }
                        bool first = true;
                        for (const auto& [k, v] : row.items())
                            out << (first ? "" : ",") << (v.is_string() ? v.get<std::string>() : v.dump()), first = false;
                        out << "\n";
                    }
                }
                return ok;
            }
            if (action == "sweep") {
                auto s = formulas::sweep_positivity(p_max ? p_max : 10000);
                nlohmann::ordered_json j{{"p_min", s.p_min},
                                         {"p_max", s.p_max},
                                         {"f_nonnegative", s.f_nonnegative},
                                         {"g_nonnegative", s.g_nonnegative},
                                         {"f_min", to_string(s.f_min)},
                                         {"f_min_at", s.f_min_at},
                                         {"g_min", to_string(s.g_min)},
                                         {"g_min_at", s.g_min_at},
                                         {"forms_agree", s.forms_agree},
                                         {"f_dominance_from", s.f_dominance_from},
                                         {"g_dominance_from", s.g_dominance_from},
                                         {"covers_all_p", s.covers_all_p()}};
                detail::print_json(out, j);
                return s.covers_all_p() ? ok : check_failed;
            }
            // eval
            if (fp < 3 || fn < 1) throw invalid_argument("formulas eval needs --p >= 3 and --n >= 1");
            nlohmann::ordered_json j;
            j["n"] = fn;
            j["p"] = fp;
            j["turan_number"] = turan_number(static_cast<std::uint64_t>(fn), static_cast<int>(fp));
            j["delta"] = to_string(delta(static_cast<std::uint64_t>(fn), static_cast<int>(fp)));
            auto dec = decompose_n(static_cast<std::uint64_t>(fn), static_cast<int>(fp));
            j["x"] = dec.x;
            j["y"] = dec.y;
            if (dec.y == 0) j["divisible_minimum"] = to_string(formulas::divisible_minimum(fn, fp));
            auto br = formulas::g_p_bracket(fn, fp);
            j["main_term_n2"] = to_string(formulas::main_term(fp) * Rational(fn) * Rational(fn));
            j["bracket"] = {{"lower", to_string(br.lower)}, {"upper", to_string(br.upper)}};
            if (!fr.empty()) {
                auto b = formulas::bound_set(fn, fp, parse_rational(fr));
                j["r"] = to_string(b.r);
                j["remainder_edge_cap"] = to_string(b.remainder_edge_cap);
                j["r_star_edges"] = to_string(b.r_star_edges);
                j["r_star_top"] = to_string(b.r_star_top);
                j["ell1"] = to_string(b.ell1);
                j["ell2"] = to_string(b.ell2);
                j["F"] = to_string(b.F);
                j["F_floor"] = to_string(b.F_floor);
            }
            auto qc = formulas::quadratic_identity(fp, fn);
            j["quadratic_identity"] = qc.holds();
            detail::print_json(out, j);
            return ok;
        }

        if (*verify) {
            std::vector<CheckReport> reports;
            if (section == "all") {
                VerifyOptions vo;
                vo.small = !full;
                vo.threads = threads;
                vo.seed = seed;
                reports = verify_all(vo);
            } else if (section == "constructions") {
                ConstructionSweep s;
                if (full) s.xs = {1, 2};
                s.threads = threads;
                reports = verify_constructions(s);
            } else if (section == "formulas") {
                reports = verify_formulas(full ? FormulaSweep{} : FormulaSweep{100, 20, {1, 66, 1000}});
            } else if (section == "jump") {
                SearchOptions so;
                so.threads = threads;
                so.budget = cfg.search_budget;
                so.emit_witnesses = false;
                reports = verify_jump(5, full ? 8 : 7, 3, so);
            } else {
                if (verify_in.empty()) throw invalid_argument("verify " + section + " needs --in");
                Graph g = detail::read_input(verify_in, in);
                if (section == "packing") {
                    PackingCheckOptions po;
                    po.seed = seed;
                    po.trials = trials;
                    po.packing.node_budget = cfg.packing_budget;
                    reports = verify_packing_checks(g, verify_p, po, {{"graph6", graph6_encode(g)}});
                } else {
                    reports.push_back(verify_reduction(g, verify_p, {{"graph6", graph6_encode(g)}}));
                }
            }
            const bool csv = verify_format ? *verify_format == "csv" : cfg.format == OutputFormat::csv;
            if (csv)
                out << to_csv(reports, !no_timing);
            else
                detail::print_json(out, to_json(reports, !no_timing));
            return any_failure(reports) ? check_failed : ok;
        }
    } catch (const budget_exceeded& e) {
        err << "satedge: " << e.what() << "\n";
        return budget;
    } catch (const parse_error& e) {
        err << "satedge: " << e.what() << "\n";
        return usage;
    } catch (const invalid_argument& e) {
        err << "satedge: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "satedge: " << e.what() << "\n";
        return check_failed;
    }
    return usage;
}

}  // namespace satedge::cli
