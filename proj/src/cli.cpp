#include "gallai/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "gallai/certificate.hpp"
#include "gallai/colouring_io.hpp"
#include "gallai/connectivity.hpp"
#include "gallai/enumeration.hpp"
#include "gallai/graph_constructions.hpp"
#include "gallai/hypergraph_constructions.hpp"
#include "gallai/search.hpp"

namespace gallai {

namespace {

using Clock = std::chrono::steady_clock;
using Object = std::variant<EdgeColouring, Hypergraph>;

const std::vector<std::string> kSubcommands = {"construct", "verify", "count", "certify", "search", "pipeline"};
const std::vector<std::string> kConstructions = {"cyclic", "delete",   "blowup",         "double",
                                                 "paths",  "pipeline", "pointwise",      "k17",
                                                 "mono",   "strong-blowup", "covering-blowup", "parity",
                                                 "cov4",   "minimal3"};
const std::vector<std::string> kTasks = {"triangles", "partition", "minimal3", "hunt"};

int need(const std::optional<int>& value, const char* flag) {
    if (!value) throw SpecError(std::string("missing --") + flag);
    return *value;
}

void add_parameters(CLI::App* app, RunSpec& spec) {
    app->add_option("--k", spec.k, "palette size");
    app->add_option("--n", spec.n, "vertex count");
    app->add_option("--d", spec.d, "set size for counting, or girth parameter for paths");
    app->add_option("--seed", spec.seed, "random seed");
    app->add_option("--workers", spec.workers, "worker threads (0 = default)");
}

void add_output(CLI::App* app, RunSpec& spec) {
    app->add_option("-o,--output", spec.output, "output file ('-' for stdout)");
}

void add_construction_parameters(CLI::App* app, RunSpec& spec) {
    app->add_option("--in", spec.input, "input colouring file");
    app->add_option("--r", spec.r, "uniformity for mono (default 3)");
    app->add_option("--v", spec.v, "vertex to delete");
    app->add_option("--sizes", spec.sizes, "class sizes for blowup")->delimiter(',');
    app->add_option("--special", spec.special, "special colour for double (default k)");
    app->add_option("--times", spec.times, "number of blow-up applications");
    app->add_flag("--unchecked", spec.unchecked, "skip input checks of blow-ups and cov4");
}

void add_checks(CLI::App* app, RunSpec& spec) {
    app->add_option("--notion", spec.notions, "graph, pointwise, strong or covering (repeatable)");
    app->add_option("--threshold", spec.threshold, "tricoloured threshold");
    app->add_option("--max-colours", spec.max_colours, "also report the most colours on a clique of this size");
    app->add_option("--sample", spec.sample, "check this many random sets instead of all");
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
    return out;
}

// ---------------------------------------------------------------------------

Object load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open " + path);
    std::string first;
    std::getline(in, first);
    in.clear();
    in.seekg(0);
    if (first == kHypergraphMagic) return decode_hypergraph(in);
    return decode(in);
}

EdgeColouring load_colouring(const RunSpec& spec) {
    if (spec.input.empty()) throw SpecError("missing --in");
    auto obj = load(spec.input);
    if (!std::holds_alternative<EdgeColouring>(obj)) throw SpecError(spec.input + " is not a colouring");
    return std::get<EdgeColouring>(std::move(obj));
}

Json construction_params(const RunSpec& spec) {
    Json p = Json::object();
    if (spec.k) p["k"] = *spec.k;
    if (spec.n) p["n"] = *spec.n;
    if (spec.d && spec.construction == "paths") p["d"] = *spec.d;
    if (spec.construction == "paths") p["seed"] = spec.seed;
    if (spec.r) p["r"] = *spec.r;
    if (spec.v) p["v"] = *spec.v;
    if (!spec.sizes.empty()) p["sizes"] = spec.sizes;
    if (spec.special) p["special"] = *spec.special;
    if (spec.construction.find("blowup") != std::string::npos) p["times"] = spec.times;
    if (!spec.input.empty()) p["in"] = spec.input;
    if (spec.unchecked) p["unchecked"] = true;
    return p;
}

Object build(const RunSpec& spec) {
    const auto& name = spec.construction;
    if (name == "cyclic") return cyclic_prime_colouring(need(spec.k, "k"));
    if (name == "delete") return delete_vertex(load_colouring(spec), need(spec.v, "v"));
    if (name == "blowup") return blow_up(load_colouring(spec), spec.sizes);
    if (name == "double") {
        const auto c = load_colouring(spec);
        const auto h = check_doubling_hypotheses(c, spec.special.value_or(c.k()), spec.workers);
        return double_extension(c, h);
    }
    if (name == "paths")
        return paths_colouring(need(spec.k, "k"), need(spec.n, "n"), spec.seed, spec.d.value_or(3)).colouring;
    if (name == "pipeline") return upper_bound_pipeline(need(spec.k, "k"), spec.workers).colouring;
    if (name == "pointwise") return pointwise_cycles_colouring(need(spec.k, "k"), need(spec.n, "n"));
    if (name == "k17") return k17_colouring();
    if (name == "mono") {
        const int n = need(spec.n, "n");
        const int r = spec.r.value_or(3);
        return EdgeColouring::from_function(n, r, 1, [](std::span<const Vertex>) { return 1; });
    }
    if (name == "strong-blowup" || name == "covering-blowup") {
        if (spec.times < 1) throw SpecError("--times must be positive");
        auto c = load_colouring(spec);
        for (int t = 0; t < spec.times; ++t)
            c = (name == "strong-blowup") ? strong_blowup(c, !spec.unchecked, spec.workers)
                                          : covering_blowup(c, !spec.unchecked, spec.workers);
        return c;
    }
    if (name == "parity") return parity_covering_2colouring(need(spec.n, "n"));
    if (name == "cov4") {
        const auto base = parity_covering_2colouring(need(spec.n, "n"));
        return covering_4graph_colouring(base, base, !spec.unchecked);
    }
    if (name == "minimal3") return minimal_connected_3graph(need(spec.n, "n"));
    throw SpecError("unknown construction '" + name + "' (expected one of " + join_names(kConstructions) + ")");
}

// Default notion for an object when none is requested.
Notion default_notion(const RunSpec& spec, int r) {
    const auto& name = spec.construction;
    if (name == "pointwise") return Notion::Pointwise;
    if (name == "covering-blowup" || name == "parity" || name == "cov4") return Notion::Covering;
    return r == 2 ? Notion::Graph : Notion::Strong;
}

std::vector<Notion> notions(const RunSpec& spec, int r) {
    std::vector<Notion> out;
    for (const auto& name : spec.notions) {
        try {
            out.push_back(parse_notion(name));
        } catch (const std::invalid_argument& e) {
            throw SpecError(e.what());
        }
    }
    if (out.empty()) out.push_back(default_notion(spec, r));
    for (auto notion : out)
        if (notion == Notion::Graph && r != 2) throw SpecError("notion graph needs r = 2");
    return out;
}

void add_connectivity(Certificate& cert, const EdgeColouring& c, const RunSpec& spec) {
    for (auto notion : notions(spec, c.r()))
        for (Colour i = 1; i <= c.k(); ++i) cert.add_connectivity(i, is_connected(colour_class(c, i), c.n(), notion));
}

void add_counts(Certificate& cert, const EdgeColouring& c, const RunSpec& spec) {
    EnumerationOptions options;
    options.workers = spec.workers;
    options.sample = spec.sample;
    options.seed = spec.seed;
    const int d = spec.d.value_or(c.r() + 1);
    if (d < c.r() || d > c.n()) throw SpecError("--d must lie between r and n");
    cert.add_multicoloured(multicoloured_family(c, d, options));
    if (c.r() >= 3) cert.add_tricoloured(tricoloured_count(c, spec.threshold, options));
    if (spec.max_colours) {
        if (c.r() != 2) throw SpecError("--max-colours needs r = 2");
        if (*spec.max_colours < 2 || *spec.max_colours > c.n()) throw SpecError("--max-colours must lie between 2 and n");
        cert.add_max_colours(max_colours_on_d_set(c, *spec.max_colours, spec.workers));
    }
}

void add_hypergraph(Certificate& cert, const Hypergraph& h, const RunSpec& spec) {
    cert.set_shape(h.n(), h.r(), 1);
    for (auto notion : notions(spec, h.r())) cert.add_connectivity(1, is_connected(h, h.n(), notion));
    cert.add_detail("edges", h.size());
    if (h.r() == 3) {
        const auto rep = pair_graph_report(h);
        cert.add_detail("pair_graph", {{"nodes", rep.nodes},
                                       {"edges", rep.edges},
                                       {"reduced_edges", rep.reduced_edges},
                                       {"connected", rep.connected},
                                       {"reduced_connected", rep.reduced_connected},
                                       {"implied_min_edges", rep.implied_min_edges}});
        if (rep.reduced_connected) cert.add_check("edge_lower_bound", rep.bound_respected);
    }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw SpecError("cannot write " + path);
    file << text;
}

std::string encode_object(const Object& obj) {
    std::ostringstream s;
    if (const auto* c = std::get_if<EdgeColouring>(&obj))
        encode(*c, s);
    else
        encode_hypergraph(std::get<Hypergraph>(obj), s);
    return s.str();
}

int emit(const Certificate& cert, Clock::time_point start, const RunSpec& spec, std::ostream& out) {
    const auto doc = cert.finish(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    write_text(spec.output, doc.dump(2) + "\n", out);
    return exit_code(doc);
}

int run_search(const RunSpec& spec, std::ostream& out) {
    const auto start = Clock::now();
    SearchReport rep;
    if (spec.task == "triangles")
        rep = min_multicoloured_triangles(need(spec.k, "k"), need(spec.n, "n"), spec.budget, spec.workers,
                                          spec.unreduced);
    else if (spec.task == "partition")
        rep = min_partition_family(need(spec.k, "k"), spec.budget);
    else if (spec.task == "minimal3")
        rep = min_connected_3graph_edges(need(spec.n, "n"), spec.budget);
    else if (spec.task == "hunt")
        rep = tricoloured_counterexample_hunt(need(spec.n, "n"), spec.k.value_or(3), spec.seeds,
                                              spec.budget == 0 ? 200000 : spec.budget, spec.seed);
    else
        throw SpecError("unknown search task '" + spec.task + "' (expected one of " + join_names(kTasks) + ")");
    Certificate cert("search:" + spec.task, nullptr);
    cert.add_search(rep);
    return emit(cert, start, spec, out);
}

int run_pipeline(const RunSpec& spec, std::ostream& out) {
    const auto start = Clock::now();
    const int k = need(spec.k, "k");
    const auto res = upper_bound_pipeline(k, spec.workers);
    if (!spec.save.empty()) write_text(spec.save, encode(res.colouring), out);
    Certificate cert("pipeline", {{"k", k}});
    cert.set_shape(res.colouring.n(), 2, res.colouring.k());
    for (Colour i = 1; i <= res.colouring.k(); ++i)
        cert.add_connectivity(i, is_connected(colour_class(res.colouring, i), res.colouring.n(), Notion::Graph));
    EnumerationOptions options;
    options.workers = spec.workers;
    const auto fam = multicoloured_family(res.colouring, 3, options);
    cert.add_multicoloured(fam);
    cert.add_detail("k0", res.k0);
    cert.add_detail("predicted_count", res.predicted_count);
    cert.add_check("realised_equals_predicted", static_cast<std::int64_t>(fam.family.size()) == res.predicted_count);
    cert.add_check("at_least_lower_bound",
                   static_cast<std::int64_t>(fam.family.size()) >= (static_cast<std::int64_t>(k) * (k - 2) + 2) / 3);
    return emit(cert, start, spec, out);
}

}  // namespace

std::optional<RunSpec> parse_run_spec(const std::vector<std::string>& args, std::ostream& out) {
    RunSpec spec;
    CLI::App app{"Connected colourings of complete graphs and hypergraphs", "gallai"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a colouring and write it in the colouring format");
    construct->add_option("name", spec.construction, "construction")->required();
    add_parameters(construct, spec);
    add_construction_parameters(construct, spec);
    add_output(construct, spec);

    auto* verify = app.add_subcommand("verify", "connectivity of every colour class");
    verify->add_option("file", spec.input, "colouring or hypergraph file")->required();
    add_parameters(verify, spec);
    verify->add_option("--notion", spec.notions, "graph, pointwise, strong or covering (repeatable)");
    add_output(verify, spec);

    auto* count = app.add_subcommand("count", "multicoloured and tricoloured sets");
    count->add_option("file", spec.input, "colouring file")->required();
    add_parameters(count, spec);
    add_checks(count, spec);
    add_output(count, spec);

    auto* certify = app.add_subcommand("certify", "connectivity and counts in one certificate");
    certify->add_option("file", spec.input, "colouring or hypergraph file");
    certify->add_option("--construct", spec.construction, "build this construction instead of reading a file");
    add_parameters(certify, spec);
    add_construction_parameters(certify, spec);
    add_checks(certify, spec);
    certify->add_option("--save", spec.save, "also write the constructed colouring here");
    add_output(certify, spec);

    auto* search = app.add_subcommand("search", "exhaustive and randomised searches");
    search->add_option("task", spec.task, "triangles, partition, minimal3 or hunt")->required();
    add_parameters(search, spec);
    search->add_option("--budget", spec.budget, "node budget (0 = unlimited)");
    search->add_option("--seeds", spec.seeds, "restarts for hunt");
    search->add_flag("--unreduced", spec.unreduced, "disable colour symmetry breaking");
    add_output(search, spec);

    auto* pipeline = app.add_subcommand("pipeline", "prime cyclic colouring followed by repeated doubling");
    add_parameters(pipeline, spec);
    pipeline->add_option("--save", spec.save, "write the colouring here");
    add_output(pipeline, spec);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw SpecError(e.what());
    }
    for (const auto& name : kSubcommands)
        if (app.got_subcommand(name)) spec.subcommand = name;
    if (spec.subcommand == "certify" && spec.input.empty() == spec.construction.empty())
        throw SpecError("certify needs exactly one of a file or --construct");
    if (spec.subcommand == "construct" || (spec.subcommand == "certify" && !spec.construction.empty())) {
        if (std::find(kConstructions.begin(), kConstructions.end(), spec.construction) == kConstructions.end())
            throw SpecError("unknown construction '" + spec.construction + "' (expected one of " +
                            join_names(kConstructions) + ")");
    }
    if (spec.subcommand == "construct" && spec.output.empty()) spec.output = "-";
    return spec;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.subcommand == "search") return run_search(spec, out);
        if (spec.subcommand == "pipeline") return run_pipeline(spec, out);
        const auto start = Clock::now();
        if (spec.subcommand == "construct") {
            write_text(spec.output, encode_object(build(spec)), out);
            return 0;
        }
        const bool from_file = spec.construction.empty();
        const Object obj = from_file ? load(spec.input) : build(spec);
        if (!from_file && !spec.save.empty()) write_text(spec.save, encode_object(obj), out);
        Certificate cert(from_file ? "file" : spec.construction,
                         from_file ? Json{{"path", spec.input}} : construction_params(spec));
        if (const auto* h = std::get_if<Hypergraph>(&obj)) {
            if (spec.subcommand == "count") throw SpecError("count needs a colouring file");
            add_hypergraph(cert, *h, spec);
            return emit(cert, start, spec, out);
        }
        const auto& c = std::get<EdgeColouring>(obj);
        cert.set_shape(c.n(), c.r(), c.k());
        if (spec.subcommand != "count") add_connectivity(cert, c, spec);
        if (spec.subcommand != "verify") add_counts(cert, c, spec);
        return emit(cert, start, spec, out);
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return e.attempts() == 0 ? 2 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::optional<RunSpec> spec;
    try {
        spec = parse_run_spec(args, out);
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!spec) return 0;
    return run(*spec, out, err);
}

}  // namespace gallai
