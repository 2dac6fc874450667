#include "afkit/harness/run.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "afkit/core/errors.hpp"
#include "afkit/harness/judge.hpp"
#include "json.hpp"

namespace afkit {

std::string to_json_line(const ManifestEntry& e) {
    nlohmann::json j;
    j["instance"] = e.instance;
    j["path"] = e.path.string();
    j["format"] = to_string(e.format);
    j["task"] = e.task.name();
    if (e.task.query) j["query"] = *e.task.query;
    if (!e.domain.empty()) j["domain"] = e.domain;
    if (e.category) j["category"] = to_string(*e.category);
    return j.dump();
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::vector<ManifestEntry> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            ManifestEntry e;
            e.path = j.at("path").get<std::string>();
            if (e.path.is_relative()) e.path = path.parent_path() / e.path;
            e.instance = j.value("instance", e.path.filename().string());
            const auto fmt = parse_input_format(j.value("format", std::string("apx")));
            if (!fmt) throw ParseError(no, "unknown format");
            e.format = *fmt;
            const auto task = parse_task_name(j.at("task").get<std::string>());
            if (!task) throw ParseError(no, "unknown task");
            e.task = *task;
            if (j.contains("query")) e.task.query = j["query"].get<std::string>();
            if (needs_query(e.task.problem) && !e.task.query) throw ParseError(no, "task needs a query argument");
            e.domain = j.value("domain", std::string());
            if (j.contains("category")) {
                e.category = parse_category(j["category"].get<std::string>());
                if (!e.category) throw ParseError(no, "unknown category");
            }
            out.push_back(std::move(e));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(no, ex.what());
        }
    }
    return out;
}

void write_manifest(const std::vector<ManifestEntry>& entries, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    for (const auto& e : entries) out << to_json_line(e) << "\n";
}

void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& work) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto loop = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                work(i);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    if (workers == 1) {
        loop();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<JobRecord> run_roster(const std::vector<SolverDescriptor>& solvers,
                                  const std::vector<ManifestEntry>& entries, const RunOptions& options) {
    const auto ns = solvers.size();
    std::vector<JobRecord> records(entries.size() * ns);
    parallel_for(records.size(), options.jobs, [&](std::size_t k) {
        const auto& e = entries[k / ns];
        const auto limits = options.limits ? *options.limits : ResourceLimits::for_task(e.task);
        records[k] = run_job(solvers[k % ns], e.task, e.instance, e.path, e.format, limits);
    });

    std::ofstream log;
    if (options.log) {
        log.open(*options.log, std::ios::app);
        if (!log) throw Error("cannot write '" + options.log->string() + "'");
    }
    std::map<std::pair<std::string, InputFormat>, Framework> frameworks;
    std::mutex mu;
    auto framework_for = [&](const ManifestEntry& e) -> const Framework* {
        std::lock_guard lock(mu);
        const auto key = std::make_pair(e.path.string(), e.format);
        auto it = frameworks.find(key);
        if (it == frameworks.end()) it = frameworks.emplace(key, read_framework(e.path, e.format)).first;
        return &it->second;
    };

    // Judging is per question; the engine work parallelizes across entries.
    parallel_for(entries.size(), options.jobs, [&](std::size_t i) {
        const auto& e = entries[i];
        const Framework* f = framework_for(e);
        ReferenceBundle ref;
        ref.framework = f;
        ref.verify_budget = options.verify_budget;
        ref.answer = reference_answer(e.task, *f, options.oracle_cap, options.reference_budget);

        std::vector<SolutionText> outputs;
        std::vector<std::size_t> participants;
        for (std::size_t s = 0; s < ns; ++s) {
            auto& r = records[i * ns + s];
            if (r.termination == Termination::Exited) {
                outputs.push_back(r.output);
                participants.push_back(i * ns + s);
            } else {
                r.set_judgement({Outcome::Zero, false, std::string(to_string(r.termination))});
            }
        }
        const auto verdicts = verify_cascade(e.task, ref, outputs);
        for (std::size_t k = 0; k < participants.size(); ++k) records[participants[k]].set_judgement(verdicts[k]);
    });

    if (log.is_open())
        for (const auto& r : records) log << to_json_line(r) << "\n" << std::flush;
    return records;
}

}  // namespace afkit
