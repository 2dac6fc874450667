#include "afkit/harness/rank.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "afkit/core/errors.hpp"
#include "json.hpp"

namespace afkit {
namespace {

std::string track_of(const TaskSpec& t) {
    return t.semantics ? "track-" + std::string(to_string(*t.semantics)) : "track-D3";
}

std::string fmt_time(double t) {
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << t;
    return ss.str();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        out.push_back(s.substr(0, p));
        if (p == std::string_view::npos) break;
        s.remove_prefix(p + 1);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::size_t to_count(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    const auto t = trim(s);
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError(line, "bad count '" + std::string(t) + "'");
    return v;
}

double to_seconds(std::string_view s, std::size_t line) {
    const std::string t(trim(s));
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) throw ParseError(line, "bad time '" + t + "'");
    return v;
}

}  // namespace

SolverScore score_from_counts(std::string solver, std::size_t correct, std::size_t wrong, double time,
                              std::size_t timeouts, std::size_t other) {
    SolverScore s;
    s.solver = std::move(solver);
    s.correct = correct;
    s.wrong = wrong;
    s.time = time;
    s.timeouts = timeouts;
    s.other = other;
    s.points = static_cast<long long>(correct) - 5 * static_cast<long long>(wrong);
    return s;
}

std::vector<SolverScore> order_scores(std::vector<SolverScore> rows) {
    std::sort(rows.begin(), rows.end(), [](const SolverScore& a, const SolverScore& b) {
        if (a.points != b.points) return a.points > b.points;
        if (a.time != b.time) return a.time < b.time;
        return a.solver < b.solver;
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i].tied = i > 0 && rows[i].points == rows[i - 1].points && rows[i].time == rows[i - 1].time;
    return rows;
}

std::vector<SolverScore> rank(const std::vector<JobRecord>& records) {
    std::map<std::string, SolverScore> rows;
    // Correct solvers per question, for unique contributions.
    std::map<std::pair<std::string, std::string>, std::vector<const JobRecord*>> solved;
    for (const auto& r : records) {
        auto& row = rows[r.solver];
        row.solver = r.solver;
        row.points += r.points;
        switch (r.verdict) {
            case Outcome::Correct:
                ++row.correct;
                row.time += r.elapsed;
                solved[{r.question(), r.instance}].push_back(&r);
                break;
            case Outcome::Incorrect: ++row.wrong; break;
            case Outcome::Zero:
                if (r.termination == Termination::Timeout) ++row.timeouts;
                else ++row.other;
                break;
        }
    }
    for (const auto& [key, who] : solved) {
        std::set<std::string> ids;
        for (const auto* r : who) ids.insert(r->solver);
        if (ids.size() != 1) continue;
        auto& row = rows[*ids.begin()];
        ++row.usc;
        if (who.front()->unchecked) ++row.usc_unchecked;
    }
    std::vector<SolverScore> out;
    for (auto& [id, row] : rows) out.push_back(std::move(row));
    return order_scores(std::move(out));
}

std::map<std::string, std::vector<SolverScore>> rank_all(const std::vector<JobRecord>& records) {
    std::set<std::string> solvers;
    std::map<std::string, std::vector<JobRecord>> scopes;
    for (const auto& r : records) {
        solvers.insert(r.solver);
        scopes[r.task.name()].push_back(r);
        if (r.task.problem != Problem::D3) scopes[track_of(r.task)].push_back(r);
    }
    std::map<std::string, std::vector<SolverScore>> out;
    for (const auto& [scope, rs] : scopes) {
        auto table = rank(rs);
        for (const auto& s : solvers)
            if (std::none_of(table.begin(), table.end(), [&](const SolverScore& row) { return row.solver == s; }))
                table.push_back(SolverScore{s});
        out[scope] = order_scores(std::move(table));
    }
    return out;
}

std::map<std::string, std::vector<double>> cactus_series(const std::vector<JobRecord>& records) {
    std::map<std::string, std::vector<double>> out;
    for (const auto& r : records)
        if (r.verdict == Outcome::Correct) out[r.solver].push_back(r.elapsed);
    for (auto& [id, times] : out) {
        std::sort(times.begin(), times.end());
        double acc = 0;
        for (auto& t : times) t = acc += t;
    }
    return out;
}

std::string scores_to_csv(const std::vector<SolverScore>& rows, std::string_view scope) {
    std::string out = "scope,rank,solver,points,time,correct,wrong,timeouts,other,usc,usc_unchecked,tied\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += std::string(scope) + "," + std::to_string(i + 1) + "," + r.solver + "," + std::to_string(r.points) +
               "," + fmt_time(r.time) + "," + std::to_string(r.correct) + "," + std::to_string(r.wrong) + "," +
               std::to_string(r.timeouts) + "," + std::to_string(r.other) + "," + std::to_string(r.usc) + "," +
               std::to_string(r.usc_unchecked) + "," + (r.tied ? "1" : "0") + "\n";
    }
    return out;
}

void emit_report(const std::vector<JobRecord>& records, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto tables = rank_all(records);

    std::ofstream csv(dir / "summary.csv");
    bool header = true;
    nlohmann::json js = nlohmann::json::object();
    for (const auto& [scope, rows] : tables) {
        auto text = scores_to_csv(rows, scope);
        if (!header) text.erase(0, text.find('\n') + 1);
        header = false;
        csv << text;
        auto& arr = js[scope] = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"solver", r.solver},   {"points", r.points},   {"time", r.time},
                           {"correct", r.correct}, {"wrong", r.wrong},     {"timeouts", r.timeouts},
                           {"other", r.other},     {"usc", r.usc},         {"usc_unchecked", r.usc_unchecked},
                           {"tied", r.tied}});
    }
    std::ofstream(dir / "summary.json") << js.dump(2) << "\n";

    std::map<std::string, std::vector<JobRecord>> by_task;
    for (const auto& r : records) by_task[r.task.name()].push_back(r);
    std::ofstream cactus(dir / "cactus.csv");
    cactus << "scope,solver,solved,cumulative_time\n";
    for (const auto& [task, rs] : by_task)
        for (const auto& [solver, series] : cactus_series(rs))
            for (std::size_t i = 0; i < series.size(); ++i)
                cactus << task << "," << solver << "," << i + 1 << "," << fmt_time(series[i]) << "\n";
}

std::vector<SolverScore> rank_counts_csv(std::string_view text) {
    std::vector<SolverScore> rows;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto cells = split(line, ',');
        if (trim(cells[0]) == "solver") continue;
        if (cells.size() != 4 && cells.size() != 6)
            throw ParseError(line_no, "expected solver,correct,wrong,time[,timeouts,other]");
        std::size_t to = 0, other = 0;
        if (cells.size() == 6) {
            to = to_count(cells[4], line_no);
            other = to_count(cells[5], line_no);
        }
        rows.push_back(score_from_counts(std::string(trim(cells[0])), to_count(cells[1], line_no),
                                         to_count(cells[2], line_no), to_seconds(cells[3], line_no), to, other));
    }
    return order_scores(std::move(rows));
}

}  // namespace afkit
