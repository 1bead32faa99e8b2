#include "planecol/process_oracle.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "planecol/errors.hpp"

namespace planecol {

namespace {

[[noreturn]] void fail(const std::string& what) { throw OracleProcessError("oracle process: " + what); }

}  // namespace

ProcessOracle::ProcessOracle(std::vector<std::string> argv, int palette,
                             std::chrono::milliseconds timeout)
    : palette_(palette), timeout_(timeout) {
  if (argv.empty()) throw PreconditionError("ProcessOracle: empty command line");
  if (timeout_.count() <= 0) throw PreconditionError("ProcessOracle: non-positive timeout");
  ::signal(SIGPIPE, SIG_IGN);

  int to_child[2] = {-1, -1}, from_child[2] = {-1, -1};
  if (::pipe(to_child) != 0) fail("pipe failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]), ::close(to_child[1]);
    fail("pipe failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(to_child[0]), ::close(to_child[1]);
    ::close(from_child[0]), ::close(from_child[1]);
    fail("fork failed");
  }
  if (pid == 0) {
    ::dup2(to_child[0], 0);
    ::dup2(from_child[1], 1);
    ::close(to_child[0]), ::close(to_child[1]);
    ::close(from_child[0]), ::close(from_child[1]);
    std::vector<char*> cargv;
    for (auto& a : argv) cargv.push_back(a.data());
    cargv.push_back(nullptr);
    ::execvp(cargv[0], cargv.data());
    std::perror("execvp");
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  in_fd_ = to_child[1];
  out_fd_ = from_child[0];
  pid_ = pid;
}

ProcessOracle::~ProcessOracle() { shutdown(); }

void ProcessOracle::shutdown() const noexcept {
  if (in_fd_ >= 0) ::close(in_fd_), in_fd_ = -1;
  if (out_fd_ >= 0) ::close(out_fd_), out_fd_ = -1;
  if (pid_ > 0) {
    ::kill((pid_t)pid_, SIGKILL);
    ::waitpid((pid_t)pid_, nullptr, 0);
    pid_ = -1;
  }
}

ColourId ProcessOracle::colour(const Point& p) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (pid_ <= 0) fail("already shut down");

  char query[96];
  std::snprintf(query, sizeof query, "%.17g %.17g\n", p.x(), p.y());
  const char* cur = query;
  std::size_t left = std::strlen(query);
  while (left > 0) {
    const ssize_t k = ::write(in_fd_, cur, left);
    if (k < 0) {
      if (errno == EINTR) continue;
      shutdown();
      fail("write failed");
    }
    cur += k;
    left -= (std::size_t)k;
  }

  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  std::string line;
  for (;;) {
    const auto nl = buf_.find('\n');
    if (nl != std::string::npos) {
      line = buf_.substr(0, nl);
      buf_.erase(0, nl + 1);
      break;
    }
    const auto remain = std::chrono::duration_cast<std::chrono::milliseconds>(
                            deadline - std::chrono::steady_clock::now())
                            .count();
    if (remain <= 0) {
      shutdown();
      fail("reply timed out");
    }
    struct pollfd pf = {out_fd_, POLLIN, 0};
    const int pr = ::poll(&pf, 1, (int)std::min<long long>(remain, 1000));
    if (pr < 0) {
      if (errno == EINTR) continue;
      shutdown();
      fail("poll failed");
    }
    if (pr == 0) continue;
    char tmp[4096];
    const ssize_t k = ::read(out_fd_, tmp, sizeof tmp);
    if (k < 0) {
      if (errno == EINTR) continue;
      shutdown();
      fail("read failed");
    }
    if (k == 0) {
      shutdown();
      fail("closed its output");
    }
    buf_.append(tmp, (std::size_t)k);
  }

  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  const char* s = line.c_str();
  while (*s == ' ') ++s;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s, &end, 10);
  if (s == end || *end != '\0' || errno == ERANGE || v < 0 || v > 0x7fffffff) {
    shutdown();
    fail("malformed reply: '" + line + "'");
  }
  return ColourId{(std::int32_t)v};
}

}  // namespace planecol
