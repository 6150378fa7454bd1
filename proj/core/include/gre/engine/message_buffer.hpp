#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "gre/detail/byte_io.hpp"
#include "gre/error.hpp"
#include "gre/graph/types.hpp"

namespace gre {

// Communication unit: a 64-bit header followed by `count` packed records.
//
//   byte 0     op         action the receiver runs
//   byte 1     flag
//   bytes 2-3  format_id  identifies the record data width
//   bytes 4-7  count      number of records
//
// Each record is a little-endian u64 destination global id followed by the
// fixed-width data of the format. A zero-count buffer is legal.
struct BufferHeader {
  std::uint8_t op = 0;
  std::uint8_t flag = 0;
  std::uint16_t format_id = 0;
  std::uint32_t count = 0;

  bool operator==(const BufferHeader&) const = default;
};

inline constexpr std::size_t kHeaderBytes = 8;
inline constexpr std::size_t kDestBytes = 8;
inline constexpr std::size_t kDefaultBufferCapacity = 64 * 1024;

namespace op {
inline constexpr std::uint8_t kRelay = 1;        // master -> its scatter agent
inline constexpr std::uint8_t kCombine = 2;      // combiner -> its master
inline constexpr std::uint8_t kEndOfRound = 3;   // header-only round marker
}  // namespace op

struct MessageFormat {
  std::uint16_t id = 0;
  std::uint32_t data_bytes = 0;

  std::size_t record_bytes() const noexcept { return kDestBytes + data_bytes; }
  // Records that fit into a buffer of `buffer_bytes` including the header.
  std::size_t capacity(std::size_t buffer_bytes) const noexcept {
    return buffer_bytes <= kHeaderBytes ? 0 : (buffer_bytes - kHeaderBytes) / record_bytes();
  }
};

void encode_header(const BufferHeader& h, std::span<std::byte, kHeaderBytes> out) noexcept;
// Throws FormatError when fewer than 8 bytes are given.
BufferHeader decode_header(std::span<const std::byte> buffer);

template <class T>
struct Message {
  GlobalId dest = 0;
  T data{};

  bool operator==(const Message&) const = default;
};

// Packs messages into one buffer. Throws ParameterError when they exceed the
// capacity for their format (the caller must split).
template <class T>
  requires std::is_trivially_copyable_v<T>
std::vector<std::byte> pack_buffer(std::span<const Message<T>> messages, std::uint8_t op_code,
                                   std::uint8_t flag, std::uint16_t format_id,
                                   std::size_t capacity_bytes = kDefaultBufferCapacity) {
  const MessageFormat format{format_id, sizeof(T)};
  if (messages.size() > format.capacity(capacity_bytes)) {
    throw ParameterError("message count " + std::to_string(messages.size()) +
                         " exceeds buffer capacity " +
                         std::to_string(format.capacity(capacity_bytes)) + "; split required");
  }
  std::vector<std::byte> buffer(kHeaderBytes + messages.size() * format.record_bytes());
  encode_header({op_code, flag, format_id, static_cast<std::uint32_t>(messages.size())},
                std::span<std::byte, kHeaderBytes>(buffer.data(), kHeaderBytes));
  std::byte* rec = buffer.data() + kHeaderBytes;
  for (const auto& m : messages) {
    detail::store<std::uint64_t>(rec, m.dest);
    detail::store<T>(rec + kDestBytes, m.data);
    rec += format.record_bytes();
  }
  return buffer;
}

template <class T>
struct UnpackedBuffer {
  BufferHeader header;
  std::vector<Message<T>> messages;
};

// Throws FormatError when the byte length disagrees with count * record size.
template <class T>
  requires std::is_trivially_copyable_v<T>
UnpackedBuffer<T> unpack_buffer(std::span<const std::byte> buffer) {
  UnpackedBuffer<T> out;
  out.header = decode_header(buffer);
  const MessageFormat format{out.header.format_id, sizeof(T)};
  if (buffer.size() != kHeaderBytes + std::size_t{out.header.count} * format.record_bytes()) {
    throw FormatError("buffer of " + std::to_string(buffer.size()) + " bytes cannot hold " +
                      std::to_string(out.header.count) + " records of " +
                      std::to_string(format.record_bytes()) + " bytes");
  }
  out.messages.resize(out.header.count);
  const std::byte* rec = buffer.data() + kHeaderBytes;
  for (auto& m : out.messages) {
    m.dest = detail::load<std::uint64_t>(rec);
    m.data = detail::load<T>(rec + kDestBytes);
    rec += format.record_bytes();
  }
  return out;
}

// Incrementally fills fixed-capacity buffers of one format; full buffers are
// handed to `sink` (any callable taking std::vector<std::byte>&&).
class BufferBuilder {
 public:
  BufferBuilder(std::uint8_t op_code, MessageFormat format, std::size_t capacity_bytes)
      : op_(op_code), format_(format), max_records_(format.capacity(capacity_bytes)) {
    if (max_records_ == 0) throw ParameterError("buffer capacity too small for one record");
  }

  template <class T, class Sink>
  void append(GlobalId dest, const T& data, Sink&& sink) {
    static_assert(std::is_trivially_copyable_v<T>);
    if (buffer_.empty()) buffer_.resize(kHeaderBytes);
    const std::size_t at = buffer_.size();
    buffer_.resize(at + format_.record_bytes());
    detail::store<std::uint64_t>(buffer_.data() + at, dest);
    detail::store<T>(buffer_.data() + at + kDestBytes, data);
    if (++count_ == max_records_) flush(sink);
  }

  // Emits the partial buffer, if any.
  template <class Sink>
  void flush(Sink&& sink) {
    if (count_ == 0) return;
    encode_header({op_, 0, format_.id, count_},
                  std::span<std::byte, kHeaderBytes>(buffer_.data(), kHeaderBytes));
    sink(std::move(buffer_));
    buffer_ = {};
    count_ = 0;
  }

  std::size_t max_records() const noexcept { return max_records_; }

 private:
  std::uint8_t op_;
  MessageFormat format_;
  std::size_t max_records_;
  std::uint32_t count_ = 0;
  std::vector<std::byte> buffer_;
};

}  // namespace gre
