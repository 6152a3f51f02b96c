#include "ddl/oracle.hpp"

#include <csignal>
#include <cerrno>
#include <chrono>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "ddl/error.hpp"
#include "ddl/knowledge_base.hpp"

namespace ddl {

namespace {

SubsumptionGoal as_subsumption(const OracleGoal& goal) {
  if (const auto* s = std::get_if<SubsumptionGoal>(&goal)) return *s;
  return {std::get<SatisfiabilityGoal>(goal).target, Concept::bottom()};
}

std::string goal_key(const OracleGoal& goal) {
  if (const auto* s = std::get_if<SubsumptionGoal>(&goal)) {
    return "ASK " + s->lhs.str() + " [= " + s->rhs.str();
  }
  return "SAT " + std::get<SatisfiabilityGoal>(goal).target.str();
}

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  Fd(Fd&& o) noexcept : fd_(o.release()) {}
  ~Fd() { reset(); }
  int get() const { return fd_; }
  int release() { return std::exchange(fd_, -1); }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

struct Child {
  pid_t pid = -1;

  void kill_and_reap() {
    if (pid <= 0) return;
    ::kill(-pid, SIGKILL);
    int status = 0;
    ::waitpid(pid, &status, 0);
    pid = -1;
  }

  // Exit status, or nullopt if still running at the deadline.
  std::optional<int> wait_until(std::chrono::steady_clock::time_point deadline) {
    for (;;) {
      int status = 0;
      const pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) {
        pid = -1;
        return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
      }
      if (std::chrono::steady_clock::now() >= deadline) return std::nullopt;
      ::usleep(1000);
    }
  }
};

}  // namespace

std::string render_oracle_request(const OracleQuery& query) {
  KnowledgeBase kb = KnowledgeBase::from_axioms(query.tbox, query.rbox);
  const SubsumptionGoal g = as_subsumption(query.goal);
  collect_signature(g.lhs, kb.signature);
  collect_signature(g.rhs, kb.signature);
  return "QUERY\n" + serialize_kb(kb) + "ASK " + g.lhs.str() + " [= " + g.rhs.str() + "\nEND\n";
}

OracleVerdict external_entails(const OracleQuery& query, const OracleConfig& endpoint) {
  static const bool sigpipe_ignored = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;

  const std::string request = render_oracle_request(query);
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::milliseconds(static_cast<long long>(endpoint.timeout_seconds * 1000.0));

  int to_child[2], from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw OracleSpawnError(std::strerror(errno));
  Fd child_in(to_child[0]), write_end(to_child[1]);
  if (::pipe2(from_child, O_CLOEXEC) != 0) throw OracleSpawnError(std::strerror(errno));
  Fd read_end(from_child[0]), child_out(from_child[1]);

  Child child;
  child.pid = ::fork();
  if (child.pid < 0) throw OracleSpawnError("fork failed: " + std::string(std::strerror(errno)));
  if (child.pid == 0) {
    // Own process group, so a timeout also stops whatever the shell started.
    ::setpgid(0, 0);
    ::dup2(child_in.get(), STDIN_FILENO);
    ::dup2(child_out.get(), STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", endpoint.command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(child.pid, child.pid);
  child_in.reset();
  child_out.reset();
  ::fcntl(write_end.get(), F_SETFL, O_NONBLOCK);
  ::fcntl(read_end.get(), F_SETFL, O_NONBLOCK);

  std::size_t written = 0;
  std::string reply;
  bool eof = false;
  while (!eof) {
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      child.kill_and_reap();
      throw OracleTimeout("external oracle '" + endpoint.command + "' timed out after " +
                          std::to_string(endpoint.timeout_seconds) + " s");
    }
    pollfd fds[2];
    nfds_t n = 0;
    fds[n++] = {read_end.get(), POLLIN, 0};
    if (write_end.get() >= 0) fds[n++] = {write_end.get(), POLLOUT, 0};
    const auto wait_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count() + 1;
    if (::poll(fds, n, static_cast<int>(wait_ms)) < 0 && errno != EINTR) {
      child.kill_and_reap();
      throw OracleProtocolError("poll failed: " + std::string(std::strerror(errno)));
    }
    if (n == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t w = ::write(write_end.get(), request.data() + written, request.size() - written);
      if (w > 0) written += static_cast<std::size_t>(w);
      if (w < 0 && errno != EAGAIN) written = request.size();  // reader gone
      if (written == request.size()) write_end.reset();
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      char buf[512];
      const ssize_t r = ::read(read_end.get(), buf, sizeof buf);
      if (r > 0) {
        reply.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0) {
        eof = true;
      }
    }
  }
  write_end.reset();
  read_end.reset();
  const auto status = child.wait_until(std::chrono::steady_clock::now() + std::chrono::milliseconds(200));
  if (!status) child.kill_and_reap();

  const std::size_t newline = reply.find('\n');
  std::string line = reply.substr(0, newline);
  if (newline != std::string::npos &&
      reply.find_first_not_of(" \t\r\n", newline) != std::string::npos) {
    throw OracleProtocolError("external oracle replied with more than one line");
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  if (line.empty() && eof && status && *status == 127) {
    throw OracleSpawnError("could not run external oracle '" + endpoint.command + "'");
  }
  bool answer;
  if (line == "yes") {
    answer = true;
  } else if (line == "no") {
    answer = false;
  } else {
    throw OracleProtocolError("external oracle replied '" + line + "', expected 'yes' or 'no'");
  }
  if (std::holds_alternative<SatisfiabilityGoal>(query.goal)) answer = !answer;
  return {answer, VerdictSource::External};
}

OracleVerdict Reasoner::decide(const Theory& theory, const OracleGoal& goal) {
  std::string key = theory.key();
  key += '\x1f';
  key += goal_key(goal);
  {
    std::lock_guard lock(memo_mutex_);
    ++stats_.queries;
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.cache_hits;
      return it->second;
    }
  }

  const SubsumptionGoal sub = as_subsumption(goal);
  const bool internal = tableau::supports(theory, sub.lhs) && tableau::supports(theory, sub.rhs);
  OracleVerdict verdict;
  if (internal || !external_) {
    TableauStats ts;
    if (const auto* s = std::get_if<SubsumptionGoal>(&goal)) {
      verdict.answer = tableau::entails(theory, s->lhs, s->rhs, &ts, tableau_options);
    } else {
      verdict.answer = tableau::is_satisfiable(theory, std::get<SatisfiabilityGoal>(goal).target,
                                               &ts, tableau_options);
    }
    std::lock_guard lock(memo_mutex_);
    ++stats_.internal_calls;
    stats_.tableau_steps += ts.steps;
  } else {
    std::lock_guard serial(external_mutex_);
    verdict = external_entails(OracleQuery{theory.tbox(), theory.rbox(), goal}, *external_);
    std::lock_guard lock(memo_mutex_);
    ++stats_.external_calls;
  }

  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::move(key), verdict);
  return verdict;
}

OracleVerdict Reasoner::decide(const OracleQuery& query) {
  return decide(Theory(query.tbox, query.rbox), query.goal);
}

Reasoner::Stats Reasoner::stats() const {
  std::lock_guard lock(memo_mutex_);
  return stats_;
}

}  // namespace ddl
