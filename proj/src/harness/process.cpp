#include "afkit/harness/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/time.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "afkit/core/errors.hpp"

namespace afkit {
namespace {

constexpr std::size_t kErrCap = 64 * 1024;
constexpr int kPollMs = 100;

std::size_t resident_bytes(pid_t pid) {
    std::ifstream in("/proc/" + std::to_string(pid) + "/statm");
    std::size_t pages_total = 0, pages_resident = 0;
    if (!(in >> pages_total >> pages_resident)) return 0;
    return pages_resident * static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
}

double seconds(const timeval& tv) { return static_cast<double>(tv.tv_sec) + static_cast<double>(tv.tv_usec) / 1e6; }

}  // namespace

ResourceLimits ResourceLimits::for_task(const TaskSpec& task) {
    if (task.problem == Problem::D3) return {1800, 6656ULL << 20};
    return {600, 4ULL << 30};
}

std::uint64_t parse_bytes(const std::string& text) {
    if (text.empty()) throw InvalidConfig("empty memory size");
    std::uint64_t mult = 1;
    std::string digits = text;
    switch (text.back()) {
        case 'K': case 'k': mult = 1ULL << 10; digits.pop_back(); break;
        case 'M': case 'm': mult = 1ULL << 20; digits.pop_back(); break;
        case 'G': case 'g': mult = 1ULL << 30; digits.pop_back(); break;
        default: break;
    }
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(digits.c_str(), &end);
    if (digits.empty() || end != digits.c_str() + digits.size() || errno || !(v > 0))
        throw InvalidConfig("bad memory size '" + text + "'");
    return static_cast<std::uint64_t>(v * static_cast<double>(mult));
}

ResourceLimits apply_env_overrides(ResourceLimits limits) {
    if (const char* t = std::getenv("AFKIT_TIMEOUT"); t && *t) {
        char* end = nullptr;
        const double v = std::strtod(t, &end);
        if (*end || !(v > 0)) throw InvalidConfig(std::string("bad AFKIT_TIMEOUT '") + t + "'");
        limits.wall_seconds = v;
    }
    if (const char* m = std::getenv("AFKIT_MEMORY"); m && *m) limits.memory_bytes = parse_bytes(m);
    return limits;
}

std::size_t jobs_from_env(std::size_t fallback) {
    if (const char* j = std::getenv("AFKIT_JOBS"); j && *j) {
        char* end = nullptr;
        const long v = std::strtol(j, &end, 10);
        if (*end || v < 1) throw InvalidConfig(std::string("bad AFKIT_JOBS '") + j + "'");
        return static_cast<std::size_t>(v);
    }
    return fallback < 1 ? 1 : fallback;
}

ProcessResult run_process(const std::vector<std::string>& argv, const ResourceLimits& limits) {
    ProcessResult res;
    if (argv.empty()) {
        res.error = "empty command";
        return res;
    }
    // Everything the child touches is prepared before fork.
    std::vector<char*> cargv;
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);

    int out_pipe[2], err_pipe[2], status_pipe[2];
    if (pipe2(out_pipe, O_CLOEXEC) || pipe2(err_pipe, O_CLOEXEC) || pipe2(status_pipe, O_CLOEXEC)) {
        res.error = std::string("pipe: ") + std::strerror(errno);
        return res;
    }
    const int devnull = open("/dev/null", O_RDONLY | O_CLOEXEC);
    const auto start = std::chrono::steady_clock::now();
    const pid_t pid = fork();
    if (pid < 0) {
        res.error = std::string("fork: ") + std::strerror(errno);
        for (int fd : {out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1], status_pipe[0], status_pipe[1], devnull})
            close(fd);
        return res;
    }
    if (pid == 0) {
        setpgid(0, 0);
        if (limits.memory_bytes > 0) {
            rlimit rl{limits.memory_bytes, limits.memory_bytes};
            setrlimit(RLIMIT_AS, &rl);
        }
        dup2(devnull, 0);
        dup2(out_pipe[1], 1);
        dup2(err_pipe[1], 2);
        execvp(cargv[0], cargv.data());
        const int e = errno;
        [[maybe_unused]] auto n = write(status_pipe[1], &e, sizeof e);
        _exit(127);
    }
    setpgid(pid, pid);
    close(out_pipe[1]);
    close(err_pipe[1]);
    close(status_pipe[1]);
    close(devnull);

    int exec_errno = 0;
    const auto got = read(status_pipe[0], &exec_errno, sizeof exec_errno);
    close(status_pipe[0]);
    if (got == static_cast<ssize_t>(sizeof exec_errno)) {
        waitpid(pid, nullptr, 0);
        close(out_pipe[0]);
        close(err_pipe[0]);
        res.error = "cannot execute '" + argv[0] + "': " + std::strerror(exec_errno);
        return res;
    }
    res.spawned = true;

    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
    int open_fds = 2;
    bool reaped = false;
    int status = 0;
    rusage usage{};
    char buf[65536];
    while (open_fds > 0 || !reaped) {
        if (open_fds > 0) {
            const int ready = poll(fds, 2, kPollMs);
            if (ready < 0 && errno != EINTR) break;
            for (int k = 0; k < 2; ++k) {
                if (fds[k].fd < 0 || !(fds[k].revents & (POLLIN | POLLHUP | POLLERR))) continue;
                const auto n = read(fds[k].fd, buf, sizeof buf);
                if (n > 0) {
                    if (k == 0) res.out.append(buf, static_cast<std::size_t>(n));
                    else if (res.err.size() < kErrCap)
                        res.err.append(buf, std::min(static_cast<std::size_t>(n), kErrCap - res.err.size()));
                } else if (n == 0 || (errno != EINTR && errno != EAGAIN)) {
                    close(fds[k].fd);
                    fds[k].fd = -1;
                    --open_fds;
                }
            }
        } else {
            usleep(kPollMs * 1000);
        }
        if (!reaped) {
            const pid_t w = wait4(pid, &status, WNOHANG, &usage);
            if (w == pid) {
                reaped = true;
                res.wall_seconds = elapsed();
                // Stray descendants must not keep the pipes open.
                kill(-pid, SIGKILL);
                continue;
            }
            res.peak_rss_bytes = std::max(res.peak_rss_bytes, resident_bytes(pid));
            if (limits.memory_bytes > 0 && res.peak_rss_bytes > limits.memory_bytes) {
                res.memory_exceeded = true;
                kill(-pid, SIGKILL);
            } else if (elapsed() >= limits.wall_seconds) {
                res.timed_out = true;
                kill(-pid, SIGKILL);
            }
        }
    }
    if (!reaped) {
        kill(-pid, SIGKILL);
        wait4(pid, &status, 0, &usage);
        res.wall_seconds = elapsed();
    }
    for (auto& p : fds)
        if (p.fd >= 0) close(p.fd);

    res.cpu_seconds = seconds(usage.ru_utime) + seconds(usage.ru_stime);
    res.peak_rss_bytes = std::max(res.peak_rss_bytes, static_cast<std::size_t>(usage.ru_maxrss) * 1024);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    if (WIFSIGNALED(status)) res.signal = WTERMSIG(status);
    return res;
}

}  // namespace afkit
