#include "afkit/harness/solver.hpp"

#include <algorithm>
#include <cctype>
#include <csignal>
#include <cstring>

#include "afkit/core/errors.hpp"
#include "json.hpp"

namespace afkit {
namespace {

// Short limits for the capability probes.
const ResourceLimits kProbeLimits{30, 1ULL << 30};

std::vector<std::string> probe(const std::vector<std::string>& command, const std::string& flag) {
    auto argv = command;
    argv.push_back(flag);
    const auto res = run_process(argv, kProbeLimits);
    if (!res.spawned) throw InvalidConfig(res.error);
    if (res.exit_code != 0) throw InvalidConfig("'" + command.front() + " " + flag + "' failed");
    return parse_bracket_list(res.out);
}

}  // namespace

bool SolverDescriptor::advertises(const TaskSpec& task) const {
    return std::find(tasks.begin(), tasks.end(), task.name()) != tasks.end();
}

bool SolverDescriptor::reads(InputFormat f) const { return std::find(formats.begin(), formats.end(), f) != formats.end(); }

std::vector<std::string> parse_bracket_list(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw InvalidConfig("expected a bracketed list, got '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
    std::vector<std::string> out;
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) throw InvalidConfig("empty item in list");
        out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

SolverDescriptor parse_descriptor(std::string_view json_text, const std::filesystem::path& base_dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw InvalidConfig(std::string("solver descriptor: ") + e.what());
    }
    SolverDescriptor d;
    try {
        d.id = j.at("id").get<std::string>();
        if (j.at("command").is_string()) d.command = {j["command"].get<std::string>()};
        else d.command = j["command"].get<std::vector<std::string>>();
        if (j.contains("tasks")) d.tasks = j["tasks"].get<std::vector<std::string>>();
        if (j.contains("formats"))
            for (const auto& f : j["formats"].get<std::vector<std::string>>()) {
                const auto fmt = parse_input_format(f);
                if (!fmt) throw InvalidConfig("unknown format '" + f + "'");
                d.formats.push_back(*fmt);
            }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("solver descriptor: ") + e.what());
    }
    if (d.id.empty() || d.command.empty() || d.command.front().empty())
        throw InvalidConfig("solver descriptor needs an id and a command");
    // Relative executables resolve against the descriptor's directory.
    auto& exe = d.command.front();
    if (!base_dir.empty() && exe.find('/') != std::string::npos && std::filesystem::path(exe).is_relative())
        exe = (base_dir / exe).lexically_normal().string();
    if (!j.contains("tasks")) d.tasks = probe(d.command, "--problems");
    if (!j.contains("formats"))
        for (const auto& f : probe(d.command, "--formats"))
            if (auto fmt = parse_input_format(f)) d.formats.push_back(*fmt);
    for (const auto& t : d.tasks)
        if (!parse_task_name(t)) throw InvalidConfig("solver '" + d.id + "' advertises unknown task '" + t + "'");
    return d;
}

SolverDescriptor load_descriptor(const std::filesystem::path& path) {
    return parse_descriptor(read_text(path), path.parent_path());
}

JobRecord run_job(const SolverDescriptor& solver, const TaskSpec& task, const std::string& instance_id,
                  const std::filesystem::path& instance_file, InputFormat format, const ResourceLimits& limits) {
    JobRecord r;
    r.solver = solver.id;
    r.task = task;
    r.instance = instance_id;
    r.termination = Termination::SpawnFailed;
    if (!solver.advertises(task)) {
        r.diagnostic = "task " + task.name() + " not advertised";
        return r;
    }
    if (!solver.reads(format)) {
        r.diagnostic = "format " + std::string(to_string(format)) + " not supported";
        return r;
    }
    auto argv = solver.command;
    for (const std::string& a :
         {std::string("-p"), task.name(), std::string("-f"), instance_file.string(), std::string("-fo"),
          std::string(to_string(format))})
        argv.push_back(a);
    if (task.query) {
        argv.push_back("-a");
        argv.push_back(*task.query);
    }
    const auto res = run_process(argv, limits);
    r.elapsed = res.wall_seconds;
    r.cpu = res.cpu_seconds;
    r.exit_status = res.exit_code;
    r.output.raw = res.out;
    if (!res.spawned) {
        r.diagnostic = res.error;
    } else if (res.timed_out) {
        r.termination = Termination::Timeout;
        r.diagnostic = "wall-time limit reached";
    } else if (res.memory_exceeded) {
        r.termination = Termination::Memout;
        r.diagnostic = "memory limit reached";
    } else if (res.signal != 0 || res.exit_code != 0) {
        r.termination = Termination::Crashed;
        r.diagnostic = res.signal ? std::string("killed by signal ") + strsignal(res.signal)
                                  : "exit status " + std::to_string(res.exit_code);
        if (!res.err.empty()) r.diagnostic += ": " + res.err.substr(0, 200);
    } else {
        r.termination = Termination::Exited;
        r.output = parse_solution(task, res.out);
    }
    return r;
}

}  // namespace afkit
