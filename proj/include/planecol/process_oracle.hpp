/// Colouring oracle backed by a child process. Wire protocol, line based:
/// each query writes "X Y\n" (17 significant digits) to the child's stdin and
/// reads one integer colour line from its stdout. Queries are serialized
/// under a mutex; a reply slower than the timeout kills the child and raises
/// OracleProcessError, as does any exit or malformed reply.
#pragma once

#include <chrono>
#include <mutex>
#include <string>
#include <vector>

#include "planecol/oracle.hpp"

namespace planecol {

class ProcessOracle final : public ColouringOracle {
 public:
  ProcessOracle(std::vector<std::string> argv, int palette,
                std::chrono::milliseconds timeout = std::chrono::milliseconds(5000));
  ~ProcessOracle() override;
  ProcessOracle(const ProcessOracle&) = delete;
  ProcessOracle& operator=(const ProcessOracle&) = delete;

  ColourId colour(const Point& p) const override;
  int palette_size() const override { return palette_; }

 private:
  void shutdown() const noexcept;

  int palette_;
  std::chrono::milliseconds timeout_;
  mutable std::mutex mu_;
  mutable std::string buf_;
  mutable int in_fd_ = -1;
  mutable int out_fd_ = -1;
  mutable long pid_ = -1;
};

}  // namespace planecol
