#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <thread>
#include <vector>

namespace brush {

/// Answer requests read line by line from `in`, one response line each.
void serve_stream(std::istream& in, std::ostream& out, std::uint64_t default_seed = 0);

/// Newline-delimited JSON over TCP on 127.0.0.1. Each connection gets its
/// own thread; requests on one connection are answered in order.
class Server {
 public:
  explicit Server(std::uint64_t default_seed = 0) : default_seed_(default_seed) {}
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Bind and listen. Port 0 picks a free port. Returns the bound port;
  /// throws std::runtime_error on failure.
  int listen(int port);
  /// Accept connections until stop() is called.
  void run();
  void stop();

 private:
  void handle_connection(int fd);

  std::uint64_t default_seed_;
  int listen_fd_ = -1;
  std::atomic<bool> stopping_{false};
  std::mutex mutex_;
  std::vector<std::thread> workers_;
  std::vector<int> open_fds_;
};

}  // namespace brush
