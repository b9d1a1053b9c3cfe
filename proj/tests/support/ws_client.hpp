#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

namespace glareview::testing {

// Minimal blocking WebSocket client for exercising the frame service.
class WsClient {
 public:
  WsClient(std::uint16_t port, const std::string& path = "/frames")
      : ws_(ioc_) {
    boost::asio::ip::tcp::resolver resolver(ioc_);
    boost::asio::connect(ws_.next_layer(),
                         resolver.resolve("127.0.0.1", std::to_string(port)));
    ws_.read_message_max(64ull << 20);
    ws_.handshake("127.0.0.1:" + std::to_string(port), path);
  }

  ~WsClient() {
    boost::beast::error_code ec;
    ws_.close(boost::beast::websocket::close_code::normal, ec);
  }

  void send_binary(const std::vector<std::uint8_t>& message) {
    ws_.binary(true);
    ws_.write(boost::asio::buffer(message));
  }

  void send_text(const std::string& message) {
    ws_.text(true);
    ws_.write(boost::asio::buffer(message));
  }

  std::vector<std::uint8_t> receive(bool* was_text = nullptr) {
    boost::beast::flat_buffer buffer;
    ws_.read(buffer);
    if (was_text) *was_text = ws_.got_text();
    const auto data = buffer.cdata();
    const auto* p = static_cast<const std::uint8_t*>(data.data());
    return {p, p + data.size()};
  }

  std::vector<std::uint8_t> round_trip(const std::vector<std::uint8_t>& message) {
    send_binary(message);
    return receive();
  }

 private:
  boost::asio::io_context ioc_;
  boost::beast::websocket::stream<boost::asio::ip::tcp::socket> ws_;
};

}  // namespace glareview::testing
