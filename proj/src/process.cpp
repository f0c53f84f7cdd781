#include "process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/time.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "nnequiv/error.hpp"

namespace nnequiv::detail {

namespace {

using Clock = std::chrono::steady_clock;

struct Fd {
    int fd = -1;
    Fd() = default;
    explicit Fd(int f) : fd(f) {}
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    ~Fd() { reset(); }
    void reset() {
        if (fd >= 0) {
            ::close(fd);
            fd = -1;
        }
    }
};

void make_pipe(Fd& read_end, Fd& write_end) {
    int fds[2];
    if (::pipe2(fds, O_CLOEXEC) != 0) {
        throw Error(std::string("pipe2 failed: ") + std::strerror(errno));
    }
    read_end.fd = fds[0];
    write_end.fd = fds[1];
}

[[noreturn]] void child_fail(const char* what) {
    const char* msg = std::strerror(errno);
    (void)!::write(STDERR_FILENO, what, std::strlen(what));
    (void)!::write(STDERR_FILENO, ": ", 2);
    (void)!::write(STDERR_FILENO, msg, std::strlen(msg));
    (void)!::write(STDERR_FILENO, "\n", 1);
    ::_exit(127);
}

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv, const std::optional<std::string>& stdin_path,
                          double timeout_seconds, std::optional<std::size_t> memory_limit_mib) {
    if (argv.empty()) {
        throw Error("empty command line");
    }
    ProcessResult result;

    Fd out_r, out_w, err_r, err_w;
    make_pipe(out_r, out_w);
    make_pipe(err_r, err_w);

    std::vector<char*> cargv;
    for (const std::string& a : argv) {
        cargv.push_back(const_cast<char*>(a.c_str()));
    }
    cargv.push_back(nullptr);
    const char* in_path = stdin_path ? stdin_path->c_str() : "/dev/null";

    const auto start = Clock::now();
    const pid_t pid = ::fork();
    if (pid < 0) {
        throw Error(std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::setpgid(0, 0);
        if (memory_limit_mib) {
            const rlim_t bytes = static_cast<rlim_t>(*memory_limit_mib) * 1024 * 1024;
            struct rlimit lim {
                bytes, bytes
            };
            if (::setrlimit(RLIMIT_AS, &lim) != 0) {
                child_fail("setrlimit");
            }
        }
        const int in_fd = ::open(in_path, O_RDONLY);
        if (in_fd < 0) {
            child_fail("open stdin");
        }
        if (::dup2(in_fd, STDIN_FILENO) < 0 || ::dup2(out_w.fd, STDOUT_FILENO) < 0 ||
            ::dup2(err_w.fd, STDERR_FILENO) < 0) {
            child_fail("dup2");
        }
        ::execvp(cargv[0], cargv.data());
        child_fail("exec");
    }

    ::setpgid(pid, pid);  // also done in the child; whichever runs first wins
    result.started = true;
    out_w.reset();
    err_w.reset();

    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(timeout_seconds));
    std::optional<Clock::time_point> drain_deadline;
    char buf[65536];

    while (out_r.fd >= 0 || err_r.fd >= 0) {
        const auto now = Clock::now();
        if (!result.timed_out && now >= deadline) {
            result.timed_out = true;
            ::kill(-pid, SIGKILL);
            drain_deadline = now + std::chrono::seconds(2);
        }
        if (drain_deadline && now >= *drain_deadline) {
            break;  // a descendant escaped the group and still holds a pipe
        }
        const auto until = drain_deadline ? *drain_deadline : deadline;
        const auto wait_ms = std::chrono::duration_cast<std::chrono::milliseconds>(until - now).count();

        pollfd fds[2];
        nfds_t n = 0;
        if (out_r.fd >= 0) {
            fds[n++] = {out_r.fd, POLLIN, 0};
        }
        if (err_r.fd >= 0) {
            fds[n++] = {err_r.fd, POLLIN, 0};
        }
        const int rc = ::poll(fds, n, static_cast<int>(std::max<long long>(1, std::min<long long>(wait_ms, 1000))));
        if (rc < 0) {
            if (errno == EINTR) {
                continue;
            }
            break;
        }
        for (nfds_t i = 0; i < n; ++i) {
            if ((fds[i].revents & (POLLIN | POLLHUP | POLLERR)) == 0) {
                continue;
            }
            const bool is_out = fds[i].fd == out_r.fd;
            const ssize_t got = ::read(fds[i].fd, buf, sizeof buf);
            if (got > 0) {
                (is_out ? result.stdout_text : result.stderr_text).append(buf, static_cast<std::size_t>(got));
            } else if (got == 0 || (errno != EINTR && errno != EAGAIN)) {
                (is_out ? out_r : err_r).reset();
            }
        }
    }

    int status = 0;
    struct rusage usage {};
    while (::wait4(pid, &status, 0, &usage) < 0 && errno == EINTR) {
    }
    ::kill(-pid, SIGKILL);  // stragglers left in the group

    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.max_rss_kib = usage.ru_maxrss;
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
        result.term_signal = WTERMSIG(status);
    }
    return result;
}

}  // namespace nnequiv::detail
