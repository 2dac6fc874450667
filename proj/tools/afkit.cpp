// afkit: competition-style solver front end plus benchmark tooling.
//
// With no subcommand (or `solve`, `oracle`) the flags follow the solver
// contract: --formats, --problems, -p <task> -f <file> -fo <format> [-a <arg>].
// Stdout then carries nothing but the answer.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "afkit/core/errors.hpp"
#include "afkit/engine/engine.hpp"
#include "afkit/gen/config.hpp"
#include "afkit/gen/generators.hpp"
#include "afkit/gen/presets.hpp"
#include "afkit/harness/classify.hpp"
#include "afkit/harness/rank.hpp"
#include "afkit/harness/run.hpp"
#include "afkit/harness/select.hpp"
#include "afkit/harness/solver.hpp"
#include "afkit/io/formats.hpp"
#include "afkit/io/solution.hpp"

namespace fs = std::filesystem;
using namespace afkit;

namespace {

constexpr int kUsage = 2;

struct UsageError : Error {
    using Error::Error;
};

std::string bracket(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out + "]";
}

// ---- solver mode ----

int solver_mode(const std::vector<std::string>& args, Backend backend) {
    std::optional<std::string> task_name, file, format_name, query, engine_name;
    std::optional<std::size_t> cap;
    std::optional<std::uint64_t> budget;
    bool line_mode = false;
    auto value = [&](std::size_t& i) -> const std::string& {
        if (i + 1 >= args.size()) throw UsageError("flag " + args[i] + " needs a value");
        return args[++i];
    };
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a == "--formats") {
            std::cout << "[apx,tgf]\n";
            return 0;
        }
        if (a == "--problems") {
            std::cout << bracket(all_task_names()) << "\n";
            return 0;
        }
        if (a == "-p") task_name = value(i);
        else if (a == "-f") file = value(i);
        else if (a == "-fo") format_name = value(i);
        else if (a == "-a") query = value(i);
        else if (a == "--engine") engine_name = value(i);
        else if (a == "--cap") cap = std::stoul(value(i));
        else if (a == "--budget") budget = std::stoull(value(i));
        else if (a == "--line-mode") line_mode = true;
        else throw UsageError("unknown flag '" + a + "'");
    }
    if (!task_name && !file && !format_name) {
        std::cout << "afkit 1.0\n";
        return 0;
    }
    if (!task_name || !file || !format_name) throw UsageError("solving needs -p, -f and -fo");
    auto task = parse_task_name(*task_name);
    if (!task) throw UsageError("unsupported task '" + *task_name + "'");
    const auto format = parse_input_format(*format_name);
    if (!format) throw UsageError("unsupported format '" + *format_name + "'");
    if (needs_query(task->problem) && !query) throw UsageError("task " + *task_name + " needs -a <argument>");
    if (query) task->query = *query;
    if (engine_name) {
        if (*engine_name == "oracle") backend = Backend::Oracle;
        else if (*engine_name == "optimized") backend = Backend::Optimized;
        else throw UsageError("unknown engine '" + *engine_name + "'");
    }

    const auto f = read_framework(*file, *format);
    SolveOptions opts;
    opts.backend = backend;
    if (cap) opts.oracle_cap = *cap;
    opts.engine.node_budget = budget;
    const auto answer = solve_with(*task, f, opts);
    std::cout << write_solution(*task, answer, {line_mode}) << "\n";
    return 0;
}

// ---- generate ----

struct GeneratedInstance {
    std::string id;
    fs::path path;
    std::string domain;
    std::uint64_t seed;
    std::string config;
};

Graph read_graph(const fs::path& path) {
    const auto f = read_framework(path, InputFormat::Tgf);
    Graph g{f.names(), {}};
    for (const auto& [a, b] : f.attack_list()) g.edges.emplace_back(f.name(a), f.name(b));
    return g;
}

void write_instances_csv(const std::vector<GeneratedInstance>& items, const fs::path& path) {
    std::ofstream out(path);
    out << "id,path,domain,seed,config\n";
    for (const auto& it : items)
        out << it.id << "," << it.path.filename().string() << "," << it.domain << "," << it.seed << "," << it.config
            << "\n";
}

// Reads id,path,domain[,...] rows; relative paths resolve against the file.
std::vector<ClassifiedInstance> read_instance_rows(const fs::path& csv, std::map<std::string, fs::path>& paths,
                                                   bool with_category) {
    std::ifstream in(csv);
    if (!in) throw Error("cannot open '" + csv.string() + "'");
    std::vector<ClassifiedInstance> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || no == 1) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        if (cells.size() < (with_category ? 4u : 3u)) throw ParseError(no, "too few columns");
        ClassifiedInstance inst{cells[0], cells[2], HardnessCategory::NotClassified};
        if (with_category) {
            const auto c = parse_category(cells[3]);
            if (!c) throw ParseError(no, "unknown category '" + cells[3] + "'");
            inst.category = *c;
        }
        fs::path p = cells[1];
        paths[inst.id] = p.is_relative() ? csv.parent_path() / p : p;
        out.push_back(inst);
    }
    return out;
}

InputFormat format_of(const fs::path& p) {
    return p.extension() == ".tgf" ? InputFormat::Tgf : InputFormat::Apx;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    static const std::vector<std::string> kSubcommands = {"generate", "classify", "select", "run", "report"};
    try {
        if (args.empty() || std::find(kSubcommands.begin(), kSubcommands.end(), args.front()) == kSubcommands.end()) {
            auto backend = Backend::Optimized;
            if (!args.empty() && args.front() == "oracle") {
                backend = Backend::Oracle;
                args.erase(args.begin());
            } else if (!args.empty() && args.front() == "solve") {
                args.erase(args.begin());
            }
            return solver_mode(args, backend);
        }

        CLI::App app{"afkit benchmark tooling"};
        app.require_subcommand(1);

        auto* gen = app.add_subcommand("generate", "Write generated instances and an instances.csv index");
        std::string gen_config, gen_preset, gen_batch, gen_graph, gen_format = "apx";
        fs::path gen_out = ".";
        std::uint64_t gen_seed = 1;
        std::size_t gen_count = 1;
        gen->add_option("--config", gen_config, "Config text such as \"erdos n=100 probAttacks=0.2\"");
        gen->add_option("--preset", gen_preset, "Published parameter grid")
            ->check(CLI::IsMember(preset_names()));
        gen->add_option("--batch", gen_batch, "File with one config per line");
        gen->add_option("--graph", gen_graph, "TGF graph for traffic configs");
        gen->add_option("--count", gen_count, "Instances per --config");
        gen->add_option("--seed", gen_seed, "Master seed");
        gen->add_option("--out", gen_out, "Output directory");
        gen->add_option("--format", gen_format)->check(CLI::IsMember({"apx", "tgf"}));

        auto* cls = app.add_subcommand("classify", "Three reference solvers at twice the timeout");
        fs::path cls_instances, cls_out = "classified.csv";
        std::vector<fs::path> cls_solvers;
        std::string cls_group = "A";
        double cls_timeout = 1200;
        std::size_t cls_jobs = 1;
        cls->add_option("--instances", cls_instances, "instances.csv from generate")->required();
        cls->add_option("--solver", cls_solvers, "Solver descriptor, three times")->required()->expected(3);
        cls->add_option("--group", cls_group)->check(CLI::IsMember({"A", "B", "C"}));
        cls->add_option("--timeout", cls_timeout, "Per-run limit in seconds (twice the competition timeout)");
        cls->add_option("--jobs", cls_jobs);
        cls->add_option("--out", cls_out);

        auto* sel = app.add_subcommand("select", "Apply quotas and pick query arguments");
        fs::path sel_classified, sel_out = "manifest.jsonl", sel_reuse;
        std::string sel_group = "A";
        std::uint64_t sel_seed = 1;
        bool sel_short = false, sel_stable = false;
        double sel_min_yes = 0.2, sel_min_no = 0.2;
        sel->add_option("--classified", sel_classified, "classified.csv from classify")->required();
        sel->add_option("--group", sel_group)->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
        sel->add_option("--seed", sel_seed);
        sel->add_option("--out", sel_out);
        sel->add_option("--reuse-arguments", sel_reuse, "Manifest whose instances and queries to reuse (group E)");
        sel->add_option("--min-yes", sel_min_yes);
        sel->add_option("--min-no", sel_min_no);
        sel->add_flag("--allow-short", sel_short, "Take what small pools hold instead of failing");
        sel->add_flag("--stable-report", sel_stable, "Print stable-extension existence per category");

        auto* run = app.add_subcommand("run", "Run a solver roster over a manifest");
        fs::path run_manifest, run_log = "jobs.jsonl", run_report;
        std::vector<fs::path> run_solvers;
        std::optional<double> run_timeout;
        std::optional<std::string> run_memory;
        std::size_t run_jobs = 0;
        run->add_option("--manifest", run_manifest)->required();
        run->add_option("--solver", run_solvers, "Solver descriptor (repeatable)")->required();
        run->add_option("--log", run_log);
        run->add_option("--timeout", run_timeout, "Seconds, for every task");
        run->add_option("--memory", run_memory, "Bytes with optional K/M/G suffix, for every task");
        run->add_option("--jobs", run_jobs);
        run->add_option("--report", run_report, "Also write report files here");

        auto* rep = app.add_subcommand("report", "Tables and cactus series");
        fs::path rep_log, rep_counts, rep_out = "report";
        rep->add_option("--log", rep_log, "Job log from run");
        rep->add_option("--counts", rep_counts, "CSV solver,correct,wrong,time[,timeouts,other]");
        rep->add_option("--out", rep_out);

        try {
            std::vector<std::string> rev(args.rbegin(), args.rend());
            app.parse(rev);
        } catch (const CLI::ParseError& e) {
            return app.exit(e);
        }

        if (gen->parsed()) {
            const int sources = !gen_config.empty() + !gen_preset.empty() + !gen_batch.empty();
            if (sources != 1) throw UsageError("give exactly one of --config, --preset, --batch");
            const auto fmt = *parse_input_format(gen_format);
            fs::create_directories(gen_out);
            std::vector<std::pair<GeneratorConfig, std::uint64_t>> jobs;
            std::string domain;
            SeededRng seeds(gen_seed);
            if (!gen_preset.empty()) {
                domain = gen_preset;
                for (auto& p : preset(gen_preset, gen_seed)) jobs.emplace_back(p.config, p.seed);
            } else if (!gen_config.empty()) {
                const auto cfg = parse_config(gen_config);
                domain = std::string(kind_name(cfg));
                for (std::size_t i = 0; i < gen_count; ++i) jobs.emplace_back(cfg, i == 0 ? gen_seed : seeds.next());
            } else {
                for (auto& e : parse_batch(read_text(gen_batch))) jobs.emplace_back(e.config, e.seed ? *e.seed : seeds.next());
            }
            std::optional<Graph> graph;
            std::vector<GeneratedInstance> items;
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                const auto& [cfg, seed] = jobs[i];
                Framework f;
                if (const auto* t = std::get_if<Traffic>(&cfg)) {
                    if (gen_graph.empty()) throw UsageError("traffic configs need --graph");
                    if (!graph) graph = read_graph(gen_graph);
                    f = traffic_to_af(*graph, t->p_symmetric, seed);
                } else {
                    f = generate(cfg, seed);
                }
                const std::string dom = domain.empty() ? std::string(kind_name(cfg)) : domain;
                char idx[24];
                std::snprintf(idx, sizeof idx, "%04zu", i + 1);
                const std::string id = dom + "_" + idx;
                const auto path = gen_out / (id + "." + gen_format);
                std::ofstream(path) << write_framework(f, fmt);
                items.push_back({id, path, dom, seed, format_config(cfg)});
            }
            write_instances_csv(items, gen_out / "instances.csv");
            std::cout << items.size() << " instances written to " << gen_out.string() << "\n";
            return 0;
        }

        if (cls->parsed()) {
            std::map<std::string, fs::path> paths;
            const auto instances = read_instance_rows(cls_instances, paths, false);
            std::vector<SolverDescriptor> solvers;
            for (const auto& p : cls_solvers) solvers.push_back(load_descriptor(p));
            const auto task = representative_task(*parse_group(cls_group));
            const ResourceLimits limits{cls_timeout, ResourceLimits::for_task(task).memory_bytes};
            std::vector<JobRecord> runs(instances.size() * 3);
            parallel_for(runs.size(), cls_jobs, [&](std::size_t k) {
                const auto& inst = instances[k / 3];
                const auto& path = paths[inst.id];
                runs[k] = run_job(solvers[k % 3], task, inst.id, path, format_of(path), limits);
            });
            std::ofstream out(cls_out);
            out << "id,path,domain,category,t1,t2,t3\n";
            for (std::size_t i = 0; i < instances.size(); ++i) {
                std::array<ReferenceRun, 3> refs;
                std::string cells;
                for (std::size_t s = 0; s < 3; ++s) {
                    const auto& r = runs[i * 3 + s];
                    ReferenceRun ref;
                    if (r.termination == Termination::Exited && r.output.parsable()) ref.seconds = r.elapsed;
                    else if (r.termination != Termination::Timeout) ref.crashed = true;
                    refs[s] = ref;
                    cells += "," + (ref.seconds ? std::to_string(*ref.seconds) : ref.crashed ? "crash" : "timeout");
                }
                out << instances[i].id << "," << fs::absolute(paths[instances[i].id]).string() << ","
                    << instances[i].domain << "," << to_string(classify_hardness(refs)) << cells << "\n";
            }
            std::cout << instances.size() << " instances classified into " << cls_out.string() << "\n";
            return 0;
        }

        if (sel->parsed()) {
            const auto group = *parse_group(sel_group);
            std::map<std::string, fs::path> paths;
            const auto classified = read_instance_rows(sel_classified, paths, true);
            SeededRng rng(sel_seed);
            std::vector<ManifestEntry> manifest;
            std::vector<ClassifiedInstance> chosen;
            std::map<std::string, std::vector<ArgumentId>> reused;
            if (!sel_reuse.empty()) {
                std::set<std::string> seen;
                for (const auto& e : read_manifest(sel_reuse)) {
                    if (e.task.query) reused[e.instance].push_back(*e.task.query);
                    if (seen.insert(e.instance).second) {
                        paths[e.instance] = e.path;
                        chosen.push_back({e.instance, e.domain, e.category.value_or(HardnessCategory::NotClassified)});
                    }
                }
                // A query list may repeat across tasks of the reused group.
                for (auto& [id, qs] : reused) {
                    std::sort(qs.begin(), qs.end());
                    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
                }
            } else {
                auto sel_rng = rng.stream(1);
                chosen = select_for_quota(classified, SelectionQuota::for_group(benchmark_source(group)), sel_rng,
                                          sel_short);
            }
            std::map<std::string, Framework> frameworks;
            for (const auto& c : chosen) frameworks.emplace(c.id, read_framework(paths[c.id], format_of(paths[c.id])));
            std::vector<QueryInstance> qinst;
            for (const auto& c : chosen) qinst.push_back({c.id, &frameworks.at(c.id), c.category});

            auto entry = [&](const ClassifiedInstance& c, TaskSpec t) {
                return ManifestEntry{c.id, fs::absolute(paths[c.id]), format_of(paths[c.id]), std::move(t), c.domain,
                                     c.category};
            };
            auto qrng = rng.stream(2);
            for (const auto& task : group_tasks(group)) {
                if (!needs_query(task.problem)) {
                    for (const auto& c : chosen) manifest.push_back(entry(c, task));
                    continue;
                }
                std::map<std::string, std::vector<ArgumentId>> queries;
                if (!reused.empty()) {
                    queries = reused;
                } else if (group == TaskGroup::D) {
                    for (const auto& c : chosen) {
                        const auto& f = frameworks.at(c.id);
                        const auto k = query_count(c.category);
                        if (k == 0) continue;
                        if (c.category == HardnessCategory::Easy || c.category == HardnessCategory::Medium) {
                            try {
                                queries[c.id].push_back(select_ideal_argument(f, qrng, EngineOptions{2'000'000}).argument);
                                continue;
                            } catch (const BudgetExceeded&) {
                            }
                        }
                        queries[c.id] = select_arguments(f, c.category, qrng);
                    }
                } else {
                    QueryOptions qo;
                    qo.min_yes_fraction = sel_min_yes;
                    qo.min_no_fraction = sel_min_no;
                    const auto qs = select_queries(qinst, task, qo, qrng);
                    queries = qs.arguments;
                    std::cerr << task.name() << ": " << qs.yes << " yes, " << qs.no << " no, " << qs.unknown
                              << " unknown" << (qs.balanced ? "" : " (minimum not reached)") << "\n";
                }
                for (const auto& c : chosen)
                    for (const auto& q : queries[c.id]) {
                        auto t = task;
                        t.query = q;
                        manifest.push_back(entry(c, t));
                    }
            }
            write_manifest(manifest, sel_out);
            std::cout << chosen.size() << " instances, " << manifest.size() << " questions written to "
                      << sel_out.string() << "\n";
            if (sel_stable) {
                std::cout << "category,nonempty,empty,unknown\n";
                for (const auto& [c, row] : stable_existence_report(qinst, 2'000'000))
                    std::cout << to_string(c) << "," << row.nonempty << "," << row.empty << "," << row.unknown << "\n";
            }
            return 0;
        }

        if (run->parsed()) {
            std::vector<SolverDescriptor> solvers;
            for (const auto& p : run_solvers) solvers.push_back(load_descriptor(p));
            RunOptions opts;
            opts.jobs = jobs_from_env(run_jobs ? run_jobs : std::max(1u, std::thread::hardware_concurrency()));
            if (run_timeout || run_memory || std::getenv("AFKIT_TIMEOUT") || std::getenv("AFKIT_MEMORY")) {
                ResourceLimits l;
                if (run_timeout) l.wall_seconds = *run_timeout;
                if (run_memory) l.memory_bytes = parse_bytes(*run_memory);
                opts.limits = apply_env_overrides(l);
            }
            opts.log = run_log;
            const auto records = run_roster(solvers, read_manifest(run_manifest), opts);
            if (!run_report.empty()) emit_report(records, run_report);
            std::cout << scores_to_csv(rank(records), "all");
            return 0;
        }

        if (rep->parsed()) {
            if (rep_log.empty() == rep_counts.empty()) throw UsageError("give exactly one of --log, --counts");
            if (!rep_counts.empty()) {
                std::cout << scores_to_csv(rank_counts_csv(read_text(rep_counts)));
                return 0;
            }
            const auto records = read_log(rep_log);
            emit_report(records, rep_out);
            std::cout << "report written to " << rep_out.string() << "\n";
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "afkit: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "afkit: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
