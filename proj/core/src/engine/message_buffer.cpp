#include "gre/engine/message_buffer.hpp"

namespace gre {

void encode_header(const BufferHeader& h, std::span<std::byte, kHeaderBytes> out) noexcept {
  out[0] = std::byte{h.op};
  out[1] = std::byte{h.flag};
  detail::store<std::uint16_t>(out.data() + 2, h.format_id);
  detail::store<std::uint32_t>(out.data() + 4, h.count);
}

BufferHeader decode_header(std::span<const std::byte> buffer) {
  if (buffer.size() < kHeaderBytes) {
    throw FormatError("buffer shorter than its 8-byte header");
  }
  BufferHeader h;
  h.op = std::to_integer<std::uint8_t>(buffer[0]);
  h.flag = std::to_integer<std::uint8_t>(buffer[1]);
  h.format_id = detail::load<std::uint16_t>(buffer.data() + 2);
  h.count = detail::load<std::uint32_t>(buffer.data() + 4);
  return h;
}

}  // namespace gre
