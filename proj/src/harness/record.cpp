#include "afkit/harness/record.hpp"

#include <fstream>

#include "afkit/core/errors.hpp"
#include "json.hpp"

namespace afkit {

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::Exited: return "exited";
        case Termination::Timeout: return "timeout";
        case Termination::Memout: return "memout";
        case Termination::Crashed: return "crashed";
        case Termination::SpawnFailed: return "spawn_failed";
    }
    return "crashed";
}

std::optional<Termination> parse_termination(std::string_view text) noexcept {
    for (auto t : {Termination::Exited, Termination::Timeout, Termination::Memout, Termination::Crashed,
                   Termination::SpawnFailed})
        if (to_string(t) == text) return t;
    return std::nullopt;
}

std::string JobRecord::question() const {
    return task.query ? task.name() + " " + *task.query : task.name();
}

std::string to_json_line(const JobRecord& r) {
    nlohmann::json j;
    j["solver"] = r.solver;
    j["task"] = r.task.name();
    if (r.task.query) j["query"] = *r.task.query;
    j["instance"] = r.instance;
    j["raw"] = r.output.raw;
    j["elapsed"] = r.elapsed;
    j["cpu"] = r.cpu;
    j["exit_status"] = r.exit_status;
    j["termination"] = to_string(r.termination);
    j["diagnostic"] = r.diagnostic;
    j["verdict"] = to_string(r.verdict);
    j["points"] = r.points;
    j["unchecked"] = r.unchecked;
    j["reason"] = r.reason;
    // Raw solver output may hold arbitrary bytes.
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

JobRecord record_from_json_line(std::string_view line) {
    const auto j = nlohmann::json::parse(line);
    JobRecord r;
    r.solver = j.at("solver").get<std::string>();
    auto task = parse_task_name(j.at("task").get<std::string>());
    if (!task) throw MalformedTask("unknown task in record");
    r.task = *task;
    if (j.contains("query")) r.task.query = j["query"].get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.output = parse_solution(r.task, j.value("raw", std::string()));
    r.elapsed = j.value("elapsed", 0.0);
    r.cpu = j.value("cpu", 0.0);
    r.exit_status = j.value("exit_status", 0);
    r.termination = parse_termination(j.value("termination", std::string("exited"))).value_or(Termination::Crashed);
    r.diagnostic = j.value("diagnostic", std::string());
    r.verdict = parse_outcome(j.value("verdict", std::string("zero"))).value_or(Outcome::Zero);
    r.points = j.value("points", 0);
    r.unchecked = j.value("unchecked", false);
    r.reason = j.value("reason", std::string());
    return r;
}

std::vector<JobRecord> read_log(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::vector<JobRecord> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(record_from_json_line(line));
        } catch (const std::exception& e) {
            throw ParseError(no, e.what());
        }
    }
    return out;
}

}  // namespace afkit
