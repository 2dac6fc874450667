#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "afkit/harness/record.hpp"

namespace afkit {

/// One row of a results table.
struct SolverScore {
    std::string solver;
    long long points = 0;
    /// Cumulative time of correct answers.
    double time = 0;
    std::size_t correct = 0;
    std::size_t wrong = 0;
    std::size_t timeouts = 0;
    /// Zero-point answers other than timeouts.
    std::size_t other = 0;
    /// Questions answered correctly by this solver alone, and how many of
    /// those were accepted unchecked.
    std::size_t usc = 0;
    std::size_t usc_unchecked = 0;
    /// Same points and time as the row above; the order between them is only
    /// the solver id.
    bool tied = false;
};

/// A row from published counts: points = correct - 5 * wrong.
SolverScore score_from_counts(std::string solver, std::size_t correct, std::size_t wrong, double time,
                              std::size_t timeouts = 0, std::size_t other = 0);

/// Sorts by points descending, then time ascending, then solver id, and sets
/// the tie flags.
std::vector<SolverScore> order_scores(std::vector<SolverScore> rows);

/// Aggregates judged records into one table. Every solver seen in `records`
/// gets a row, so a solver without records in scope scores 0.
std::vector<SolverScore> rank(const std::vector<JobRecord>& records);

/// Tables keyed by scope: one per task name ("EE-PR", "D3", ...) and one per
/// track ("track-PR", ..., "track-D3") summing the track's tasks.
std::map<std::string, std::vector<SolverScore>> rank_all(const std::vector<JobRecord>& records);

/// Cumulative time of correct answers per solver, sorted ascending, so entry
/// i is the time needed to solve i + 1 instances.
std::map<std::string, std::vector<double>> cactus_series(const std::vector<JobRecord>& records);

/// Writes summary.csv, summary.json and cactus.csv into `dir`.
void emit_report(const std::vector<JobRecord>& records, const std::filesystem::path& dir);

/// Reads published counts as CSV with header
/// `solver,correct,wrong,time[,timeouts,other]` and ranks them.
std::vector<SolverScore> rank_counts_csv(std::string_view text);

/// CSV of a table with a header row.
std::string scores_to_csv(const std::vector<SolverScore>& rows, std::string_view scope = {});

}  // namespace afkit
