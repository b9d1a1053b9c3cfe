#include "glareview/service.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "glareview/protocol.hpp"

namespace glareview {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

constexpr std::string_view kPath = "/frames";

class Session : public std::enable_shared_from_this<Session> {
 public:
  Session(tcp::socket socket, const EnhanceParams& params)
      : ws_(std::move(socket)), params_(params) {}

  void run() {
    http::async_read(ws_.next_layer(), buffer_, request_,
                     [self = shared_from_this()](beast::error_code ec,
                                                 std::size_t) {
                       self->on_upgrade_request(ec);
                     });
  }

 private:
  void on_upgrade_request(beast::error_code ec) {
    if (ec) return;
    if (!websocket::is_upgrade(request_) || std::string_view(request_.target().data(), request_.target().size()) != kPath) {
      reject(http::status::not_found);
      return;
    }
    ws_.read_message_max(protocol::kMaxRequestBytes);
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(request_, [self = shared_from_this()](beast::error_code ec) {
      if (!ec) self->read();
    });
  }

  void reject(http::status status) {
    auto response = std::make_shared<http::response<http::string_body>>(
        status, request_.version());
    response->set(http::field::content_type, "text/plain");
    response->body() = "websocket endpoint is " + std::string(kPath) + "\n";
    response->prepare_payload();
    response->keep_alive(false);
    http::async_write(ws_.next_layer(), *response,
                      [self = shared_from_this(), response](beast::error_code,
                                                            std::size_t) {
                        beast::error_code ignored;
                        self->ws_.next_layer().socket().shutdown(
                            tcp::socket::shutdown_send, ignored);
                      });
  }

  void read() {
    buffer_.clear();
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec,
                                                        std::size_t) {
      self->on_read(ec);
    });
  }

  void on_read(beast::error_code ec) {
    if (ec) return;  // closed or oversized; the session ends
    const auto data = buffer_.cdata();
    const std::span<const std::uint8_t> message(
        static_cast<const std::uint8_t*>(data.data()), data.size());

    if (ws_.got_text()) {
      const std::string_view text(reinterpret_cast<const char*>(message.data()),
                                  message.size());
      if (text == "methods") {
        outgoing_text_ = protocol::methods_json().dump();
        ws_.text(true);
        ws_.async_write(asio::buffer(outgoing_text_),
                        [self = shared_from_this()](beast::error_code ec,
                                                    std::size_t) {
                          if (!ec) self->read();
                        });
        return;
      }
      protocol::FrameResponse error;
      error.status = protocol::Status::kError;
      error.error = "unknown text command";
      outgoing_ = protocol::encode_response(error);
    } else {
      outgoing_ = protocol::handle_request(message, params_);
    }
    ws_.binary(true);
    ws_.async_write(asio::buffer(outgoing_),
                    [self = shared_from_this()](beast::error_code ec,
                                                std::size_t) {
                      if (!ec) self->read();
                    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  EnhanceParams params_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
  std::vector<std::uint8_t> outgoing_;
  std::string outgoing_text_;
};

}  // namespace

class FrameService::Impl {
 public:
  explicit Impl(ServiceConfig config)
      : config_(std::move(config)), acceptor_(ioc_) {}

  void start() {
    config_.params.validate();
    const tcp::endpoint endpoint(asio::ip::make_address(config_.address),
                                 config_.port);
    acceptor_.open(endpoint.protocol());
    acceptor_.set_option(asio::socket_base::reuse_address(true));
    acceptor_.bind(endpoint);
    acceptor_.listen(asio::socket_base::max_listen_connections);
    accept();

    const unsigned n = config_.threads != 0
                           ? config_.threads
                           : std::max(1u, std::thread::hardware_concurrency());
    for (unsigned i = 0; i < n; ++i) {
      threads_.emplace_back([this] { ioc_.run(); });
    }
  }

  void stop() {
    ioc_.stop();
    for (auto& t : threads_) {
      if (t.joinable()) t.join();
    }
    threads_.clear();
  }

  void wait() {
    for (auto& t : threads_) {
      if (t.joinable()) t.join();
    }
  }

  std::uint16_t port() const { return acceptor_.local_endpoint().port(); }
  const ServiceConfig& config() const { return config_; }

 private:
  void accept() {
    acceptor_.async_accept(asio::make_strand(ioc_),
                           [this](beast::error_code ec, tcp::socket socket) {
                             if (!ec) {
                               std::make_shared<Session>(std::move(socket),
                                                         config_.params)
                                   ->run();
                             }
                             if (acceptor_.is_open()) accept();
                           });
  }

  ServiceConfig config_;
  asio::io_context ioc_;
  tcp::acceptor acceptor_;
  std::vector<std::thread> threads_;
};

FrameService::FrameService(ServiceConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

FrameService::~FrameService() { impl_->stop(); }

void FrameService::start() { impl_->start(); }
void FrameService::wait() { impl_->wait(); }
void FrameService::stop() { impl_->stop(); }
std::uint16_t FrameService::port() const { return impl_->port(); }

std::string FrameService::url() const {
  return "ws://" + impl_->config().address + ":" + std::to_string(port()) +
         std::string(kPath);
}

}  // namespace glareview
