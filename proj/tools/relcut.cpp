#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "relcut/cells.hpp"
#include "relcut/divisor.hpp"
#include "relcut/errors.hpp"
#include "relcut/genfun.hpp"
#include "relcut/oracle.hpp"
#include "relcut/orientation.hpp"
#include "relcut/parallel.hpp"
#include "relcut/reliability.hpp"
#include "relcut/syzygy.hpp"
#include "report.hpp"

using namespace relcut;
using relcut::report::json;

namespace {

constexpr int exit_input = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_resource = 4;

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string family = "smt";
    std::string system = "smt";
    std::string targets;
    std::string p;
    std::string p_file;
    std::string divisor;
    std::string kind = "spanning";
    std::string sign;
    std::string field = "rationals";
    std::string output;
    int k = -1;
    int threads = 0;
    bool oracle = false;
    bool spanning = false;
};

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw InputError("bad vertex '" + item + "'");
            }
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw InputError("bad vertex '" + item + "'");
        }
    }
    return out;
}

Graph load(const RunConfig& cfg) {
    Graph g = read_graph_file(cfg.graph_path);
    if (!cfg.targets.empty()) {
        g = g.with_targets(parse_vertex_list(cfg.targets));
    }
    return g;
}

FieldChoice field_of(const RunConfig& cfg) {
    if (cfg.field == "rationals" || cfg.field == "q") {
        return {};
    }
    if (cfg.field == "2" || cfg.field == "mod2") {
        return {Field::mod_p, 2};
    }
    throw InputError("unknown field '" + cfg.field + "' (use rationals or 2)");
}

Family oriented_family(const std::string& name) {
    Family f = parse_family(name);
    if (f == Family::smt || f == Family::smt_oriented) {
        return Family::smt_oriented;
    }
    if (f == Family::path || f == Family::path_oriented) {
        return Family::path_oriented;
    }
    throw InputError("syzygy complexes exist for the smt and path families");
}

SignRule parse_sign(const std::string& s) {
    if (s == "head-rank") {
        return SignRule::head_rank;
    }
    if (s == "product-order") {
        return SignRule::product_order;
    }
    if (s == "repair") {
        return SignRule::repair;
    }
    throw InputError("unknown sign rule '" + s + "'");
}

Divisor parse_divisor(const std::string& text, const Graph& g) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("divisor is not JSON: ") + e.what());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != g.vertex_count()) {
        throw InputError("divisor must be a JSON array with one integer per vertex");
    }
    Divisor d;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            throw InputError("divisor entries must be integers");
        }
        d.push_back(x.get<long long>());
    }
    return d;
}

std::vector<mpq_class> probabilities(const RunConfig& cfg, const VariableSet& vars) {
    if (cfg.p.empty() == cfg.p_file.empty()) {
        throw InputError("give exactly one of --p and --p-file");
    }
    if (!cfg.p.empty()) {
        return std::vector<mpq_class>(vars.size(), parse_rational(cfg.p));
    }
    std::ifstream in(cfg.p_file);
    if (!in) {
        throw InputError("cannot open " + cfg.p_file);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("probability file is not JSON: ") + e.what());
    }
    auto value = [](const json& x) {
        if (x.is_string()) {
            return parse_rational(x.get<std::string>());
        }
        if (x.is_number()) {
            return parse_rational(x.dump());
        }
        throw InputError("probabilities must be strings or numbers");
    };
    std::vector<mpq_class> out;
    if (j.is_array()) {
        for (const auto& x : j) {
            out.push_back(value(x));
        }
    } else if (j.is_object()) {
        for (const std::string& name : vars.names) {
            if (!j.contains(name)) {
                throw InputError("probability file lacks " + name);
            }
            out.push_back(value(j[name]));
        }
    } else {
        throw InputError("probability file must hold an array or an object");
    }
    return out;
}

Family system_family(const std::string& s) {
    if (s == "smt") {
        return Family::smt;
    }
    if (s == "cut-st" || s == "cut_st") {
        return Family::cut_st;
    }
    if (s == "path") {
        return Family::path;
    }
    throw InputError("unknown system '" + s + "' (use smt, cut-st or path)");
}

json graph_json(const Graph& g) {
    return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"q", g.q()}, {"targets", g.targets()}, {"genus", g.genus()}};
}

int cmd_ideal(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    MonomialIdeal ideal = build_ideal(parse_family(cfg.family), g);
    out = report::ideal_json(ideal);
    out["family"] = cfg.family;
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_betti(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    Family f = parse_family(cfg.family);
    BettiTable table = betti_table(g, f);
    out = report::table_json(table);
    out["family"] = family_name(f);
    out["graph"] = graph_json(g);
    if (!cfg.oracle) {
        return 0;
    }
    OracleOptions opts;
    opts.field = field_of(cfg);
    BettiTable oracle = betti_table_homology(build_ideal(f, g), opts);
    bool match = oracle == table;
    out["oracle"] = {{"verdict", match ? "MATCH" : "MISMATCH"}, {"field", cfg.field}};
    if (!match) {
        out["oracle"]["table"] = report::table_json(oracle);
        out["oracle"]["difference"] = describe_difference(table, oracle);
        return exit_mismatch;
    }
    return 0;
}

int cmd_syzygy(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    Family f = oriented_family(cfg.family);
    SyzygyComplex c = cfg.sign.empty() ? build_syzygy_complex(g, f) : build_syzygy_complex(g, f, parse_sign(cfg.sign));
    OracleOptions opts;
    opts.field = field_of(cfg);
    VerifyReport rep = verify_complex(c, build_ideal(f, g), opts);
    out = report::syzygy_json(g, c);
    out["verification"] = report::verify_json(rep);
    out["graph"] = graph_json(g);
    return rep.ok() ? 0 : exit_mismatch;
}

int cmd_cells(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    CellComplex b = build_bounded_complex(g);
    out["bounded"] = report::complex_json(g, b);
    Mask targets = target_mask(g);
    if (targets != 0) {
        out["sink"] = report::complex_json(g, sink_subcomplex(g, b, targets));
    }
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_reduce(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    Divisor d = parse_divisor(cfg.divisor, g);
    Mask burnt = dhar_burn(g, d);
    json burnt_list = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (has_bit(burnt, v)) {
            burnt_list.push_back(v);
        }
    }
    out["input"] = d;
    out["degree"] = degree(d);
    out["burnt"] = burnt_list;
    out["input_is_q_reduced"] = is_q_reduced(g, d);
    if (!g.has_arcs()) {
        Divisor r = reduce_divisor(g, d);
        out["reduced"] = r;
        long long k = degree(r) + 1;
        if (r[g.q()] == -1 && k >= 0 && k <= g.genus()) {
            Mask t = orientation_for_reduced_divisor(g, r);
            out["orientation"] = {{"k", k}, {"slots", report::slots_json(g, t)}};
        }
    }
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_orient(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    std::vector<std::vector<Mask>> levels;
    if (cfg.kind == "spanning") {
        levels = enumerate_spanning_levels(g);
    } else if (cfg.kind == "path") {
        levels = enumerate_path_levels(g, target_mask(g));
    } else if (cfg.kind == "acyclic") {
        levels = {enumerate_acyclic_unique_source(g)};
    } else {
        throw InputError("unknown kind '" + cfg.kind + "' (use spanning, path or acyclic)");
    }
    json lv = json::array();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (cfg.k >= 0 && static_cast<int>(k) != cfg.k && cfg.kind != "acyclic") {
            continue;
        }
        json items = json::array();
        for (Mask m : levels[k]) {
            items.push_back(report::slots_json(g, m));
        }
        lv.push_back({{"k", k}, {"count", levels[k].size()}, {"items", items}});
    }
    out = {{"kind", cfg.kind}, {"levels", lv}, {"graph", graph_json(g)}};
    return 0;
}

int cmd_reliability(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    Family f = system_family(cfg.system);
    BettiTable t = betti_table(g, f);
    std::vector<mpq_class> p = probabilities(cfg, t.vars);
    out["polynomial"] = report::polynomial_json(k_polynomial(t));
    out["value"] = report::rational_json(reliability_exact(t, p));
    out["system"] = cfg.system;
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_genfun(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    if (cfg.spanning) {
        out["polynomial"] = report::polynomial_json(spanning_genfun_conductance(g));
        out["kind"] = "spanning";
    } else {
        out["polynomial"] = report::polynomial_json(path_genfun_starmesh(g, target_mask(g)));
        out["kind"] = "paths";
    }
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_tutte(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    Polynomial t = tutte_polynomial(g);
    out["polynomial"] = report::polynomial_json(t);
    out["spanning_trees"] = t.evaluate({1, 1}).get_str();
    out["graph"] = graph_json(g);
    return 0;
}

int cmd_check_all(const RunConfig& cfg, json& out) {
    Graph g = load(cfg);
    json checks = json::object();
    bool ok = true;
    auto record = [&](const std::string& name, const std::function<bool()>& body) {
        try {
            bool pass = body();
            checks[name] = pass ? "pass" : "fail";
            ok = ok && pass;
        } catch (const InputError& e) {
            checks[name] = std::string("skipped: ") + e.what();
        }
    };
    Mask targets = target_mask(g);
    for (Family f : all_families()) {
        if (needs_targets(f) && targets == 0) {
            continue;
        }
        record("oracle/" + family_name(f), [&] {
            return betti_table(g, f) == betti_table_homology(build_ideal(f, g));
        });
    }
    record("syzygy/smt", [&] {
        return verify_complex(build_syzygy_complex(g, Family::smt_oriented), build_ideal(Family::smt_oriented, g)).ok();
    });
    if (targets != 0) {
        record("syzygy/path", [&] {
            return verify_complex(build_syzygy_complex(g, Family::path_oriented), build_ideal(Family::path_oriented, g)).ok();
        });
    }
    std::vector<Family> systems = {Family::smt};
    if (targets != 0) {
        systems.push_back(Family::cut_st);
        systems.push_back(Family::path);
    }
    for (Family f : systems) {
        record("reliability/" + family_name(f), [&] {
            BettiTable t = betti_table(g, f);
            std::vector<mpq_class> half(t.vars.size(), mpq_class(1, 2));
            return reliability_exact(t, half) == reliability_bruteforce(build_ideal(f, g), half);
        });
    }
    record("spanning_tree_count", [&] {
        return mpz_class(static_cast<long>(enumerate_k_spanning_trees(g, 0).size())) == spanning_tree_count(g);
    });
    if (!g.has_arcs()) {
        record("h_vector", [&] { return h_vector_check(g); });
        record("multiplicity", [&] { return multiplicity_check(g); });
        for (int t : g.targets()) {
            record("alexander_inversion/" + std::to_string(t), [&] { return alexander_inversion_check(g, t); });
        }
        record("conductance", [&] {
            Polynomial direct(edge_variables(g).names);
            for (Mask t : enumerate_k_spanning_trees(g, 0)) {
                Exponents e(g.edge_count(), 0);
                for (int s : slot_list(t)) {
                    e[edge_of(s)] = 1;
                }
                direct.add_term(e, 1);
            }
            return spanning_genfun_conductance(g) == direct;
        });
        record("divisor_round_trip", [&] {
            for (const auto& level : enumerate_spanning_levels(g)) {
                for (Mask t : level) {
                    Divisor d = divisor_of_orientation(g, t);
                    if (!is_q_reduced(g, d) || reduce_divisor(g, d) != d) {
                        return false;
                    }
                    if (divisor_of_orientation(g, orientation_for_reduced_divisor(g, d)) != d) {
                        return false;
                    }
                }
            }
            return true;
        });
    }
    for (int t : g.targets()) {
        record("genfun/" + std::to_string(t), [&] {
            return path_genfun_starmesh(g, bit(t)) == path_genfun_enumerated(g, bit(t));
        });
    }
    out = {{"checks", checks}, {"ok", ok}, {"graph", graph_json(g)}};
    return ok ? 0 : exit_mismatch;
}

int dispatch(const RunConfig& cfg, json& out) {
    if (cfg.command == "ideal") {
        return cmd_ideal(cfg, out);
    }
    if (cfg.command == "betti") {
        return cmd_betti(cfg, out);
    }
    if (cfg.command == "syzygy") {
        return cmd_syzygy(cfg, out);
    }
    if (cfg.command == "cells") {
        return cmd_cells(cfg, out);
    }
    if (cfg.command == "reduce") {
        return cmd_reduce(cfg, out);
    }
    if (cfg.command == "orient") {
        return cmd_orient(cfg, out);
    }
    if (cfg.command == "reliability") {
        return cmd_reliability(cfg, out);
    }
    if (cfg.command == "genfun") {
        return cmd_genfun(cfg, out);
    }
    if (cfg.command == "tutte") {
        return cmd_tutte(cfg, out);
    }
    if (cfg.command == "check-all") {
        return cmd_check_all(cfg, out);
    }
    throw InputError("unknown command");
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}

int main(int argc, char** argv) {
    CLI::App app{"relcut: syzygies, cuts and reliability of graphs"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "worker threads (default: RELCUT_THREADS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output, "write JSON here instead of standard output");

    auto graph_arg = [&](CLI::App* sub) {
        sub->add_option("graph", cfg.graph_path, "graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--targets", cfg.targets, "comma separated target vertices (overrides the file)");
    };
    auto field_arg = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field, "rationals or 2");
    };

    CLI::App* ideal = app.add_subcommand("ideal", "minimal generators of an ideal family");
    graph_arg(ideal);
    ideal->add_option("--family", cfg.family, "smt, cut, cut_st, path, mgq, or an *_oriented variant");

    CLI::App* betti = app.add_subcommand("betti", "multigraded Betti table");
    graph_arg(betti);
    field_arg(betti);
    betti->add_option("--family", cfg.family, "ideal family");
    betti->add_flag("--oracle", cfg.oracle, "cross-check with simplicial homology");

    CLI::App* syz = app.add_subcommand("syzygy", "explicit resolution with verification");
    graph_arg(syz);
    field_arg(syz);
    syz->add_option("--family", cfg.family, "smt or path");
    syz->add_option("--sign", cfg.sign, "head-rank, product-order or repair");

    CLI::App* cells = app.add_subcommand("cells", "bounded complex and its sink subcomplex");
    graph_arg(cells);

    CLI::App* reduce = app.add_subcommand("reduce", "q-reduction and Dhar burning");
    graph_arg(reduce);
    reduce->add_option("--divisor", cfg.divisor, "JSON integer array indexed by vertex")->required();

    CLI::App* orient = app.add_subcommand("orient", "enumerate oriented k-spanning trees, k-paths or acyclic orientations");
    graph_arg(orient);
    orient->add_option("--kind", cfg.kind, "spanning, path or acyclic");
    orient->add_option("--k", cfg.k, "only this level");

    CLI::App* rel = app.add_subcommand("reliability", "exact reliability from the Betti table");
    graph_arg(rel);
    rel->add_option("--system", cfg.system, "smt, cut-st or path");
    rel->add_option("--p", cfg.p, "one probability for every edge, e.g. 1/2");
    rel->add_option("--p-file", cfg.p_file, "JSON array or object of per-edge probabilities");

    CLI::App* gen = app.add_subcommand("genfun", "generating functions by star-mesh or conductance");
    graph_arg(gen);
    gen->add_flag("--spanning", cfg.spanning, "spanning trees instead of paths");

    CLI::App* tutte = app.add_subcommand("tutte", "Tutte polynomial");
    graph_arg(tutte);

    CLI::App* check = app.add_subcommand("check-all", "run every invariant on one graph");
    graph_arg(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        if (code != 0) {
            std::cout << error_json("usage", e.what()).dump(2) << "\n";
            return exit_input;
        }
        return 0;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.threads > 0) {
        set_thread_count(cfg.threads);
    }

    json out;
    int code = 0;
    try {
        code = dispatch(cfg, out);
    } catch (const InputError& e) {
        out = error_json("input", e.what());
        code = exit_input;
    } catch (const ResourceError& e) {
        out = error_json("resource", e.what());
        code = exit_resource;
    } catch (const std::exception& e) {
        out = error_json("internal", e.what());
        code = 1;
    }
    std::string text = out.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            std::cout << error_json("input", "cannot write " + cfg.output).dump(2) << "\n";
            return exit_input;
        }
        f << text;
    }
    return code;
}
