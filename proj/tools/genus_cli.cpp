#include "maxgenus/critical.hpp"
#include "maxgenus/errors.hpp"
#include "maxgenus/families.hpp"
#include "maxgenus/genus_engine.hpp"
#include "maxgenus/joint_tree.hpp"
#include "maxgenus/surface_word.hpp"
#include "maxgenus/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolation = 4;

mg::Multigraph load_graph(const std::string& input, const std::string& family) {
    if (!family.empty()) return mg::generate(mg::parse_family_spec(family));
    if (input.empty()) throw mg::input_error("provide --input FILE or --family SPEC");
    if (input == "-") return mg::parse_edge_list(std::cin);
    std::ifstream file(input);
    if (!file) throw mg::input_error("cannot open '" + input + "'");
    return mg::parse_edge_list(file);
}

struct MaxGenusArgs {
    std::string input, family, method = "brute";
    bool check = false, no_early_exit = false, json = false, force = false, serial = false;
    int jobs = 0;
    std::uint64_t budget = 1ull << 30;
    std::uint64_t cross_check_every = 0;
};

int cmd_max_genus(const MaxGenusArgs& args) {
    mg::GenusOptions opts;
    opts.jobs = args.jobs;
    opts.early_exit = !args.no_early_exit;
    opts.budget = args.budget;
    opts.force = args.force;
    opts.cross_check_every = args.cross_check_every;
    const auto g = load_graph(args.input, args.family);

    if (args.method == "brute") {
        const auto rep = args.serial ? mg::max_genus_serial(g, opts)
                                     : mg::max_genus_exhaustive(g, opts);
        if (args.json) {
            std::cout << mg::report_to_json(rep, true, false) << "\n";
        } else {
            std::cout << "max_genus=" << rep.max_genus
                      << " upper_embeddable=" << (rep.upper_embeddable ? "true" : "false")
                      << " euler_bound=" << rep.euler_bound << " betti=" << rep.betti
                      << " systems_enumerated=" << rep.systems_enumerated << "/"
                      << rep.systems_total
                      << " early_exit=" << (rep.early_exit ? "true" : "false") << "\n";
        }
        return kExitOk;
    }

    mg::ReductionTrace trace;
    if (args.method == "alg1") {
        trace = mg::algorithm_I(g, opts);
    } else if (args.method == "alg2") {
        if (args.family.empty())
            throw mg::input_error("--method alg2 needs --family (labels required)");
        trace = mg::algorithm_II(g);
    } else {
        throw mg::input_error("--method must be brute|alg1|alg2");
    }
    if (args.check) {
        const auto oracle = mg::max_genus_exhaustive(g, opts);
        if (oracle.max_genus != trace.total) {
            std::cerr << "check failed: method total " << trace.total << " vs exhaustive "
                      << oracle.max_genus << "\n";
            return kExitViolation;
        }
    }
    if (args.json) {
        std::cout << mg::trace_to_json(trace) << "\n";
    } else {
        std::cout << "total=" << trace.total << " base_genus=" << trace.base_genus
                  << " steps=" << trace.steps.size();
        if (args.check) std::cout << " check=pass";
        std::cout << "\n";
    }
    return kExitOk;
}

struct JointTreeArgs {
    std::string input, family, rotation_file;
    std::vector<int> tree_edges;
    std::uint64_t rotation_index = 0;
    bool json = false, trace = false;
};

int cmd_joint_tree(const JointTreeArgs& args) {
    const auto g = load_graph(args.input, args.family);
    mg::SpanningTree tree;
    if (args.tree_edges.empty()) {
        tree = mg::spanning_tree(g);
    } else {
        tree = mg::spanning_tree(g, std::set<int>(args.tree_edges.begin(),
                                                  args.tree_edges.end()));
    }
    mg::RotationSystem rotation;
    if (!args.rotation_file.empty()) {
        std::ifstream file(args.rotation_file);
        if (!file) throw mg::input_error("cannot open '" + args.rotation_file + "'");
        rotation = mg::rotation_from_text(file);
    } else {
        rotation = mg::rotation_from_index(g, args.rotation_index);
    }
    const auto surf = mg::associated_surface(g, tree, rotation);
    const auto form = mg::reduce_to_standard(surf.word);
    const int by_face = mg::face_trace_genus(g, rotation);
    if (args.json) {
        nlohmann::ordered_json j;
        j["word"] = surf.word.to_string();
        j["genus"] = form.genus;
        j["face_trace_genus"] = by_face;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "word=" << surf.word.to_string() << "\n"
                  << "genus=" << form.genus << " face_trace_genus=" << by_face << "\n";
        if (args.trace) std::cout << mg::trace_to_log(form.trace);
    }
    return form.genus == by_face ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-genus toolkit: polygon words, joint trees, graph families"};
    app.require_subcommand(1);

    // reduce
    std::string word_text;
    bool reduce_trace = false, reduce_json = false;
    auto* reduce = app.add_subcommand("reduce", "reduce a polygon word to standard form");
    reduce->add_option("word", word_text, "word, e.g. \"a b a^-1 b^-1\"")->required();
    reduce->add_flag("--trace", reduce_trace, "print the transform trace");
    reduce->add_flag("--json", reduce_json, "JSON output");

    // max-genus
    MaxGenusArgs mg_args;
    auto* maxg = app.add_subcommand("max-genus", "maximum orientable genus of a multigraph");
    maxg->add_option("--input", mg_args.input, "edge-list file ('-' for stdin)");
    maxg->add_option("--family", mg_args.family, "family spec, e.g. spiral:5,6");
    maxg->add_option("--method", mg_args.method, "brute|alg1|alg2")->default_val("brute");
    maxg->add_flag("--check", mg_args.check, "also run the exhaustive oracle and compare");
    maxg->add_flag("--no-early-exit", mg_args.no_early_exit, "scan every rotation system");
    maxg->add_option("--jobs", mg_args.jobs, "worker threads (0 = all cores)");
    maxg->add_flag("--json", mg_args.json, "JSON output");
    maxg->add_option("--budget", mg_args.budget, "rotation-system budget");
    maxg->add_flag("--force", mg_args.force, "proceed past the budget");
    maxg->add_flag("--serial", mg_args.serial, "use the single-threaded reference scan");
    maxg->add_option("--cross-check-every", mg_args.cross_check_every,
                     "cross-validate face tracing against the word oracle every N systems");

    // joint-tree
    JointTreeArgs jt_args;
    auto* jt = app.add_subcommand("joint-tree", "associated surface of one rotation system");
    jt->add_option("--input", jt_args.input, "edge-list file ('-' for stdin)");
    jt->add_option("--family", jt_args.family, "family spec");
    jt->add_option("--tree", jt_args.tree_edges, "explicit spanning-tree edge ids");
    jt->add_option("--rotation-index", jt_args.rotation_index, "rotation system index");
    jt->add_option("--rotation-file", jt_args.rotation_file,
                   "rotation text file (one 'v: e.s ...' line per vertex)");
    jt->add_flag("--json", jt_args.json, "JSON output");
    jt->add_flag("--trace", jt_args.trace, "print the reduction trace");

    // family
    std::string family_spec;
    bool family_labels = false;
    auto* fam = app.add_subcommand("family", "generate a named graph family");
    fam->add_option("spec", family_spec, "e.g. mobius:3, extspiral:5,6:13-14")->required();
    fam->add_flag("--labels", family_labels, "also print the JSON label sidecar");

    // verify
    std::string suite, range;
    unsigned seed = 20240819;
    int verify_jobs = 0;
    auto* ver = app.add_subcommand("verify", "run a named property suite");
    ver->add_option("--suite", suite,
                    "lemma1.1|lemma1.2|lemma1.3|thm2.1|thm3.1|thm3.2|correspondence")
        ->required();
    ver->add_option("--range", range, "suite-specific scale, e.g. neckband:2..4");
    ver->add_option("--seed", seed, "RNG seed for randomized suites");
    ver->add_option("--jobs", verify_jobs, "worker threads for embedded searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (reduce->parsed()) {
            const auto word = mg::parse_word(word_text);
            const auto form = mg::reduce_to_standard(word);
            if (reduce_json) {
                nlohmann::ordered_json j;
                j["genus"] = form.genus;
                j["standard_form"] = mg::standard_word(form.genus).to_string();
                j["steps"] = form.trace.size();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "genus=" << form.genus << "\n"
                          << "standard_form=" << mg::standard_word(form.genus).to_string()
                          << "\n";
                if (reduce_trace) std::cout << mg::trace_to_log(form.trace);
            }
            return kExitOk;
        }
        if (maxg->parsed()) return cmd_max_genus(mg_args);
        if (jt->parsed()) return cmd_joint_tree(jt_args);
        if (fam->parsed()) {
            const auto g = mg::generate(mg::parse_family_spec(family_spec));
            std::cout << mg::to_edge_list(g);
            if (family_labels) std::cout << mg::labels_to_json(g) << "\n";
            return kExitOk;
        }
        if (ver->parsed()) {
            mg::GenusOptions opts;
            opts.jobs = verify_jobs;
            const auto res = mg::run_suite(suite, range, seed, opts);
            for (const auto& msg : res.failures) std::cerr << "FAIL " << msg << "\n";
            std::cout << "suite " << suite << ": "
                      << (res.ok() ? "PASS" : "FAIL") << " (" << res.checks << " checks, "
                      << res.failures.size() << " failures)\n";
            return res.ok() ? kExitOk : kExitViolation;
        }
    } catch (const mg::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const mg::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mg::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
