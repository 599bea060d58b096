// discordlab: spectral analysis of adversarial perturbations of
// repeated-averaging opinion dynamics on weighted graphs.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "discordlab/adversary.hpp"
#include "discordlab/defense.hpp"
#include "discordlab/dynamics.hpp"
#include "discordlab/graph.hpp"
#include "discordlab/mixed.hpp"
#include "discordlab/report.hpp"
#include "discordlab/spectral.hpp"

namespace dl = discordlab;

namespace {

dl::ObjectiveSpec parse_objective(const std::string& name, const std::string& horizon,
                                  double r) {
    if (name == "disagreement") return dl::ObjectiveSpec::disagreement(r);
    if (name == "displacement") return dl::ObjectiveSpec::displacement(r);
    if (name == "pd" || name == "pd-index")
        return dl::ObjectiveSpec::polarization_disagreement(r);
    if (name == "repeated") {
        if (horizon == "inf" || horizon == "infinity")
            return dl::ObjectiveSpec::repeated_infinite(r);
        std::size_t pos = 0;
        long t = 0;
        try {
            t = std::stol(horizon, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != horizon.size() || t < 0)
            throw dl::ArgumentError("--T must be a nonnegative integer or \"inf\"");
        return dl::ObjectiveSpec::repeated(t, r);
    }
    throw dl::ArgumentError("unknown objective \"" + name + "\"");
}

dl::JsonValue seed_columns(const dl::Matrix& basis) {
    dl::JsonValue arr = dl::JsonValue::array();
    for (std::size_t c = 0; c < basis.cols(); ++c)
        arr.push(dl::json_vector(basis.column(c)));
    return arr;
}

dl::JsonValue node_list(const dl::NodeSet& s) {
    dl::JsonValue arr = dl::JsonValue::array();
    for (int v : s.members()) arr.push(v);
    return arr;
}

void emit(const dl::JsonValue& report) { std::cout << report.dump() << "\n"; }

dl::JsonValue base_report(const std::string& command) {
    dl::JsonValue rep = dl::JsonValue::object();
    rep.set("command", command);
    return rep;
}

dl::JsonValue standard_tolerances() {
    dl::JsonValue tol = dl::JsonValue::object();
    tol.set("eig_offdiag_rel", 1e-12);
    tol.set("sdp_gap_rel", 1e-6);
    tol.set("defense_gap_rel", 1e-9);
    return tol;
}

struct AttackArgs {
    std::string graph;
    std::string objective = "disagreement";
    std::string horizon = "inf";
    std::string budget = "l2";
    double r = 1.0;
    int trials = 200;
    std::uint64_t seed = 20240901;
};

int run_attack(const AttackArgs& args) {
    const dl::Graph g = dl::load_graph_file(args.graph);
    const dl::SymMatrix l = dl::laplacian(g);
    const dl::ObjectiveSpec obj = parse_objective(args.objective, args.horizon, args.r);

    dl::JsonValue rep = base_report("attack");
    dl::JsonValue inputs = dl::JsonValue::object();
    inputs.set("graph", args.graph)
        .set("n", g.node_count())
        .set("objective", args.objective)
        .set("budget", args.budget)
        .set("R", args.r);
    if (args.objective == "repeated") inputs.set("T", args.horizon);
    rep.set("inputs", std::move(inputs));
    rep.set("tolerances", standard_tolerances());

    dl::JsonValue results = dl::JsonValue::object();
    if (args.budget == "l2") {
        const dl::AttackResult res = dl::l2_attack(l, obj);
        results.set("optimal_value", res.optimal_value)
            .set("argmax_eigenvalue", res.argmax_eigenvalue)
            .set("argmax_index", res.argmax_index)
            .set("is_unique_eigenspace", res.is_unique_eigenspace)
            .set("seed_vectors", seed_columns(res.seed_basis));
    } else if (args.budget == "linf") {
        if (obj.kind == dl::ObjectiveKind::PolarizationDisagreement)
            throw dl::ArgumentError("the pd objective has no linf form");
        const dl::SigmaMatrix sig = dl::sigma(l, obj);
        const dl::SdpAttack sdp = dl::linf_attack_sdp(sig);
        const dl::SignVector rounded =
            dl::linf_round(sig, sdp.gram_vectors, args.trials, args.seed);
        const double r2 = args.r * args.r;
        rep.set("rng_seed", args.seed);
        results.set("sdp_value", r2 * sdp.sdp_value)
            .set("rounded_vector", dl::json_vector(rounded.signs))
            .set("rounding_value", r2 * rounded.value)
            .set("trials", args.trials)
            .set("sdp_gap", sdp.gap)
            .set("sdp_iterations", sdp.iterations);
    } else if (args.budget == "l1") {
        if (obj.kind == dl::ObjectiveKind::PolarizationDisagreement)
            throw dl::ArgumentError("the pd objective has no l1 form");
        const dl::SigmaMatrix sig = dl::sigma(l, obj);
        const dl::L1Attack res = dl::l1_attack(sig);
        const double r2 = args.r * args.r;
        results.set("index", res.index)
            .set("value", r2 * res.value)
            .set("lower_bound", r2 * res.lower_bound)
            .set("upper_bound", r2 * res.upper_bound);
    } else {
        throw dl::ArgumentError("unknown budget \"" + args.budget + "\"");
    }
    rep.set("results", std::move(results));
    emit(rep);
    return 0;
}

int run_sweep(const std::string& graph, int resolution) {
    const dl::Graph g = dl::load_graph_file(graph);
    const auto rows = dl::t_sweep(dl::laplacian(g), resolution);

    dl::JsonValue rep = base_report("sweep");
    dl::JsonValue inputs = dl::JsonValue::object();
    inputs.set("graph", graph).set("n", g.node_count()).set("resolution", resolution);
    rep.set("inputs", std::move(inputs));
    rep.set("tolerances", standard_tolerances());

    dl::JsonValue table = dl::JsonValue::array();
    for (const dl::SweepPoint& p : rows) {
        dl::JsonValue row = dl::JsonValue::object();
        row.set("t", p.t)
            .set("argmax_index", p.argmax_index)
            .set("argmax_eigenvalue", p.argmax_eigenvalue)
            .set("value", p.value);
        table.push(std::move(row));
    }
    dl::JsonValue results = dl::JsonValue::object();
    results.set("rows", std::move(table));
    rep.set("results", std::move(results));
    emit(rep);
    return 0;
}

int run_defend(const std::string& graph, const std::string& objective,
               const std::string& horizon, const std::string& budget) {
    const dl::Graph g = dl::load_graph_file(graph);
    const dl::SymMatrix l = dl::laplacian(g);
    const dl::ObjectiveSpec obj = parse_objective(objective, horizon, 1.0);
    if (obj.kind == dl::ObjectiveKind::PolarizationDisagreement)
        throw dl::ArgumentError("the pd objective has no Sigma form to defend");

    dl::BudgetFunction h;
    if (budget == "l1") {
        h = dl::BudgetFunction::l1();
    } else if (budget == "sql2") {
        h = dl::BudgetFunction::squared_l2();
    } else {
        throw dl::ArgumentError("unknown defender budget \"" + budget + "\"");
    }

    const dl::DefenseResult res = dl::defend(l, obj, h);
    const dl::SigmaMatrix sig = dl::sigma(l, obj);

    dl::JsonValue rep = base_report("defend");
    dl::JsonValue inputs = dl::JsonValue::object();
    inputs.set("graph", graph)
        .set("n", g.node_count())
        .set("objective", objective)
        .set("h", budget);
    rep.set("inputs", std::move(inputs));
    rep.set("tolerances", standard_tolerances());

    dl::JsonValue results = dl::JsonValue::object();
    results.set("weights", dl::json_vector(res.weights))
        .set("defense_value", res.defense_value)
        .set("k_error", res.k_error)
        .set("feasibility_slack", res.feasibility_slack)
        .set("sdp_weights", dl::json_vector(res.sdp_weights))
        .set("undefended_value", dl::lambda_max(sig.matrix));
    rep.set("results", std::move(results));
    emit(rep);
    return 0;
}

struct MixedArgs {
    std::string g1;
    std::string g2;
    std::string mode = "random";
    std::uint64_t samples = 10000;
    std::uint64_t seed = 20240901;
};

int run_mixed(const std::string& sub, const MixedArgs& args) {
    const dl::GraphPair pair(dl::load_graph_file(args.g1), dl::load_graph_file(args.g2));

    dl::JsonValue rep = base_report("mixed " + sub);
    dl::JsonValue inputs = dl::JsonValue::object();
    inputs.set("g1", args.g1).set("g2", args.g2).set("n", pair.g1.node_count());
    if (sub == "cutsweep") {
        inputs.set("mode", args.mode).set("samples", args.samples);
    }
    rep.set("inputs", std::move(inputs));
    rep.set("tolerances", standard_tolerances());

    dl::JsonValue results = dl::JsonValue::object();
    if (sub == "value") {
        results.set("value", dl::mixed_objective(pair));
    } else if (sub == "similarity") {
        const dl::SimilarityReport sim = dl::spectral_similarity(pair);
        results.set("epsilon_spectral", sim.epsilon_spectral)
            .set("delta_operator", sim.delta_operator)
            .set("eta", sim.eta)
            .set("gamma", sim.gamma)
            .set("finite", sim.finite);
        if (!sim.finite) results.set("diagnostic", sim.diagnostic);
    } else if (sub == "bounds") {
        const double value = dl::mixed_objective(pair);
        results.set("value", value);
        results.set("eigenvalue_lower_bound", dl::mixed_lower_bound(pair));
        const dl::PhysicalBracket phys = dl::physical_similarity_bracket(pair);
        dl::JsonValue pj = dl::JsonValue::object();
        pj.set("lower", phys.lower).set("upper", phys.upper).set("delta", phys.delta);
        results.set("physical_bracket", std::move(pj));
        const dl::SimilarityReport sim = dl::spectral_similarity(pair);
        results.set("epsilon_spectral", sim.epsilon_spectral);
        if (sim.finite) {
            const dl::Bracket br = dl::similarity_bracket(pair, sim.epsilon_spectral);
            dl::JsonValue bj = dl::JsonValue::object();
            bj.set("lower", br.lower).set("upper", br.upper);
            results.set("similarity_bracket", std::move(bj));
        }
    } else if (sub == "cutsweep") {
        dl::SweepMode mode;
        if (args.mode == "exhaustive") {
            mode = dl::SweepMode::Exhaustive;
        } else if (args.mode == "random") {
            mode = dl::SweepMode::Random;
        } else {
            throw dl::ArgumentError("unknown sweep mode \"" + args.mode + "\"");
        }
        const dl::CutSweepResult res =
            dl::cut_bounds_sweep(pair, mode, args.samples, args.seed);
        if (mode == dl::SweepMode::Random) rep.set("rng_seed", args.seed);
        results.set("best_prop", res.best_prop)
            .set("best_prop_set", node_list(res.best_prop_set))
            .set("best_cor", res.best_cor)
            .set("best_cor_set", node_list(res.best_cor_set))
            .set("evaluated", res.evaluated);
        if (res.best_prop_set.size() > 0) {
            const dl::CutBounds at_best = dl::cut_bounds(pair, res.best_prop_set);
            dl::JsonValue bj = dl::JsonValue::object();
            bj.set("bound_cor", at_best.bound_cor)
                .set("bound_cor_exact", at_best.bound_cor_exact)
                .set("bound_prop", at_best.bound_prop);
            results.set("bounds_at_best", std::move(bj));
        }
    } else {
        throw dl::ArgumentError("unknown mixed subcommand \"" + sub + "\"");
    }
    rep.set("results", std::move(results));
    emit(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral analysis of adversarial opinion perturbations"};
    app.require_subcommand(1);

    AttackArgs attack_args;
    CLI::App* attack = app.add_subcommand("attack", "optimal seeding attack");
    attack->add_option("--graph", attack_args.graph, "edge-list file")->required();
    attack->add_option("--objective", attack_args.objective,
                       "disagreement|repeated|pd|displacement");
    attack->add_option("--T", attack_args.horizon, "horizon for repeated (int or inf)");
    attack->add_option("--budget", attack_args.budget, "l2|linf|l1");
    attack->add_option("--R", attack_args.r, "seed budget radius");
    attack->add_option("--trials", attack_args.trials, "rounding trials");
    attack->add_option("--seed", attack_args.seed, "rounding rng seed");

    std::string sweep_graph;
    int sweep_resolution = 64;
    CLI::App* sweep = app.add_subcommand("sweep", "disagreement attack across t*L");
    sweep->add_option("--graph", sweep_graph, "edge-list file")->required();
    sweep->add_option("--resolution", sweep_resolution, "grid points per decade");

    std::string defend_graph, defend_obj = "disagreement", defend_T = "inf",
                defend_h = "l1";
    CLI::App* defend = app.add_subcommand("defend", "optimal node weighting");
    defend->set_help_flag("--help", "print help"); // frees -h for the budget flag
    defend->add_option("--graph", defend_graph, "edge-list file")->required();
    defend->add_option("--objective", defend_obj, "disagreement|repeated|displacement");
    defend->add_option("--T", defend_T, "horizon for repeated (int or inf)");
    defend->add_option("--h", defend_h, "defender budget: l1|sql2");

    MixedArgs mixed_args;
    CLI::App* mixed = app.add_subcommand("mixed", "two-graph analyses");
    mixed->require_subcommand(1);
    std::vector<CLI::App*> mixed_subs;
    for (const char* name : {"value", "bounds", "similarity", "cutsweep"}) {
        CLI::App* sub = mixed->add_subcommand(name);
        sub->add_option("--g1", mixed_args.g1, "opinion graph")->required();
        sub->add_option("--g2", mixed_args.g2, "measurement graph")->required();
        if (std::string(name) == "cutsweep") {
            sub->add_option("--mode", mixed_args.mode, "exhaustive|random");
            sub->add_option("--samples", mixed_args.samples, "random subsets to draw");
            sub->add_option("--seed", mixed_args.seed, "subset rng seed");
        }
        mixed_subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (attack->parsed()) return run_attack(attack_args);
        if (sweep->parsed()) return run_sweep(sweep_graph, sweep_resolution);
        if (defend->parsed())
            return run_defend(defend_graph, defend_obj, defend_T, defend_h);
        if (mixed->parsed()) {
            for (std::size_t i = 0; i < mixed_subs.size(); ++i) {
                if (mixed_subs[i]->parsed()) {
                    static const char* names[] = {"value", "bounds", "similarity",
                                                  "cutsweep"};
                    return run_mixed(names[i], mixed_args);
                }
            }
        }
    } catch (const dl::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const dl::ConvergenceError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const dl::ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
