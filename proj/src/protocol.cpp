#include "glareview/protocol.hpp"

#include <chrono>

namespace glareview::protocol {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[at + i]} << (8 * i);
  return v;
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[at + i]} << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_request(Method method, const Frame& frame) {
  std::vector<std::uint8_t> out;
  out.reserve(kRequestHeaderBytes + frame.bytes().size());
  out.push_back(kVersion);
  out.push_back(method_id(method));
  out.push_back(0);
  out.push_back(0);
  put_u32(out, frame.width());
  put_u32(out, frame.height());
  out.insert(out.end(), frame.bytes().begin(), frame.bytes().end());
  return out;
}

FrameRequest decode_request(std::span<const std::uint8_t> message) {
  const std::uint8_t id = message.size() > 1 ? message[1] : 0;
  if (message.size() < kRequestHeaderBytes) {
    throw ProtocolError("request shorter than 12-byte header", id, 0, 0);
  }
  const std::uint32_t width = get_u32(message, 4);
  const std::uint32_t height = get_u32(message, 8);
  auto fail = [&](const std::string& reason) {
    throw ProtocolError(reason, id, width, height);
  };
  if (message[0] != kVersion) {
    fail("unsupported protocol version " + std::to_string(message[0]));
  }
  const auto method = method_from_id(id);
  if (!method) fail("unknown method id " + std::to_string(id));
  if (message[2] != 0 || message[3] != 0) fail("reserved bytes must be zero");
  if (width == 0 || height == 0) fail("frame dimensions must be nonzero");
  if (width > kMaxDimension || height > kMaxDimension) {
    fail("frame " + std::to_string(width) + "x" + std::to_string(height) +
         " exceeds 4096x4096");
  }
  const std::size_t expected = kRequestHeaderBytes + 3ull * width * height;
  if (message.size() != expected) {
    fail("payload length " + std::to_string(message.size() - kRequestHeaderBytes) +
         " does not match 3*" + std::to_string(width) + "*" +
         std::to_string(height));
  }
  std::vector<std::uint8_t> pixels(message.begin() + kRequestHeaderBytes,
                                   message.end());
  return {*method, Frame(width, height, std::move(pixels))};
}

std::vector<std::uint8_t> encode_response(const FrameResponse& response) {
  std::vector<std::uint8_t> out;
  out.reserve(kResponseHeaderBytes + response.payload.size() +
              response.error.size());
  out.push_back(kVersion);
  out.push_back(response.method_id);
  out.push_back(static_cast<std::uint8_t>(response.status));
  out.push_back(0);
  put_u32(out, response.width);
  put_u32(out, response.height);
  put_u64(out, response.elapsed_us);
  if (response.status == Status::kOk) {
    out.insert(out.end(), response.payload.begin(), response.payload.end());
  } else {
    out.insert(out.end(), response.error.begin(), response.error.end());
  }
  return out;
}

FrameResponse decode_response(std::span<const std::uint8_t> message) {
  if (message.size() < kResponseHeaderBytes) {
    throw std::runtime_error("response shorter than 20-byte header");
  }
  if (message[0] != kVersion) {
    throw std::runtime_error("unsupported response version");
  }
  FrameResponse r;
  r.method_id = message[1];
  if (message[2] > 1) throw std::runtime_error("invalid response status");
  r.status = static_cast<Status>(message[2]);
  r.width = get_u32(message, 4);
  r.height = get_u32(message, 8);
  r.elapsed_us = get_u64(message, 12);
  const auto body = message.subspan(kResponseHeaderBytes);
  if (r.status == Status::kOk) {
    if (body.size() != 3ull * r.width * r.height) {
      throw std::runtime_error("ok response payload length mismatch");
    }
    r.payload.assign(body.begin(), body.end());
  } else {
    r.error.assign(body.begin(), body.end());
  }
  return r;
}

std::vector<std::uint8_t> handle_request(std::span<const std::uint8_t> message,
                                         const EnhanceParams& params) {
  FrameResponse response;
  try {
    FrameRequest request = decode_request(message);
    response.method_id = method_id(request.method);
    response.width = request.frame.width();
    response.height = request.frame.height();

    const auto start = std::chrono::steady_clock::now();
    Frame enhanced = enhance(request.frame, request.method, params);
    const auto stop = std::chrono::steady_clock::now();

    response.elapsed_us = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
            .count());
    response.payload.assign(enhanced.bytes().begin(), enhanced.bytes().end());
  } catch (const ProtocolError& e) {
    response = {};
    response.method_id = e.method_id;
    response.width = e.width;
    response.height = e.height;
    response.status = Status::kError;
    response.error = e.what();
  } catch (const std::exception& e) {
    response.status = Status::kError;
    response.payload.clear();
    response.error = e.what();
  }
  return encode_response(response);
}

nlohmann::json methods_json() {
  nlohmann::json out = nlohmann::json::array();
  for (Method m : kAllMethods) {
    out.push_back({{"id", method_id(m)}, {"name", method_name(m)}});
  }
  return out;
}

}  // namespace glareview::protocol
