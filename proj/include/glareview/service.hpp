#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "glareview/enhance.hpp"

namespace glareview {

struct ServiceConfig {
  std::string address = "127.0.0.1";
  std::uint16_t port = 8765;  // 0 picks an ephemeral port
  EnhanceParams params;
  unsigned threads = 0;  // 0: hardware concurrency
};

// WebSocket endpoint at ws://<address>:<port>/frames. Each binary message is a
// FrameRequest answered by one FrameResponse, in order, per connection; the
// text message "methods" is answered with the method list as JSON.
class FrameService {
 public:
  explicit FrameService(ServiceConfig config);
  ~FrameService();

  FrameService(const FrameService&) = delete;
  FrameService& operator=(const FrameService&) = delete;

  // Binds and starts serving on background threads. Throws on bind failure.
  void start();
  // Blocks until stop() is called from another thread or a signal handler.
  void wait();
  void stop();

  std::uint16_t port() const;
  std::string url() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace glareview
