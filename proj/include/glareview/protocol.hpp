#pragma once

// Binary frame exchange carried in WebSocket messages. All integers are
// little-endian.
//
// Request (12-byte header):
//   0  u8   version (1)
//   1  u8   method id (0..6)
//   2  u8x2 reserved, zero
//   4  u32  width
//   8  u32  height
//   12 RGB8 payload, 3*width*height bytes
//
// Response (20-byte header):
//   0  u8   version (1)
//   1  u8   method id, echoed
//   2  u8   status (0 ok, 1 error)
//   3  u8   reserved, zero
//   4  u32  width
//   8  u32  height
//   12 u64  enhancement time in microseconds
//   20 RGB8 payload when ok, UTF-8 reason when status is 1

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "glareview/enhance.hpp"
#include "glareview/image.hpp"

namespace glareview::protocol {

inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kRequestHeaderBytes = 12;
inline constexpr std::size_t kResponseHeaderBytes = 20;
inline constexpr std::uint32_t kMaxDimension = 4096;
inline constexpr std::size_t kMaxRequestBytes =
    kRequestHeaderBytes + 3ull * kMaxDimension * kMaxDimension;

enum class Status : std::uint8_t { kOk = 0, kError = 1 };

struct FrameRequest {
  Method method = Method::kPassthrough;
  Frame frame;
};

struct FrameResponse {
  std::uint8_t method_id = 0;
  Status status = Status::kOk;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t elapsed_us = 0;
  std::vector<std::uint8_t> payload;  // ok responses
  std::string error;                  // error responses
};

// Carries whatever header fields were readable so the error response can echo
// them.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(const std::string& reason, std::uint8_t method_id,
                std::uint32_t width, std::uint32_t height)
      : std::runtime_error(reason),
        method_id(method_id),
        width(width),
        height(height) {}

  std::uint8_t method_id;
  std::uint32_t width;
  std::uint32_t height;
};

std::vector<std::uint8_t> encode_request(Method method, const Frame& frame);
FrameRequest decode_request(std::span<const std::uint8_t> message);

std::vector<std::uint8_t> encode_response(const FrameResponse& response);
FrameResponse decode_response(std::span<const std::uint8_t> message);

// Decodes, enhances and encodes. Never throws for malformed input; those come
// back as status-1 responses.
std::vector<std::uint8_t> handle_request(std::span<const std::uint8_t> message,
                                         const EnhanceParams& params);

// [{"id":0,"name":"passthrough"}, ...] in wire-id order.
nlohmann::json methods_json();

}  // namespace glareview::protocol
