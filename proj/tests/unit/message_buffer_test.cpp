#include <gtest/gtest.h>

#include <random>

#include "gre/engine/message_buffer.hpp"
#include "gre/error.hpp"

namespace gre {
namespace {

struct Pair {
  std::uint32_t a;
  float b;
  bool operator==(const Pair&) const = default;
};

TEST(MessageBuffer, HeaderLayoutIsFixed) {
  const std::vector<Message<std::uint64_t>> msgs = {{1, 10}, {2, 20}, {3, 30}};
  const auto bytes = pack_buffer<std::uint64_t>(msgs, 1, 0, 2);
  const std::vector<std::byte> expected = {std::byte{1}, std::byte{0}, std::byte{2}, std::byte{0},
                                           std::byte{3}, std::byte{0}, std::byte{0}, std::byte{0}};
  ASSERT_EQ(bytes.size(), 8 + 3 * 16U);
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), bytes.begin()));
  EXPECT_EQ(decode_header(bytes), (BufferHeader{1, 0, 2, 3}));
}

TEST(MessageBuffer, ZeroCountBufferIsHeaderOnly) {
  const auto bytes = pack_buffer<double>({}, op::kCombine, 0, 7);
  EXPECT_EQ(bytes.size(), kHeaderBytes);
  const auto back = unpack_buffer<double>(bytes);
  EXPECT_EQ(back.header.count, 0U);
  EXPECT_TRUE(back.messages.empty());
}

TEST(MessageBuffer, RandomRoundTripsAreByteExact) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 2000; ++round) {
    std::vector<Message<Pair>> msgs(rng() % 50);
    for (auto& m : msgs) {
      m.dest = rng();
      m.data = {static_cast<std::uint32_t>(rng()), static_cast<float>(rng() % 1000) / 7.0F};
    }
    const auto flag = static_cast<std::uint8_t>(rng());
    const auto bytes = pack_buffer<Pair>(msgs, 2, flag, 9);
    const auto back = unpack_buffer<Pair>(bytes);
    ASSERT_EQ(back.messages, msgs);
    ASSERT_EQ(back.header, (BufferHeader{2, flag, 9, static_cast<std::uint32_t>(msgs.size())}));
    ASSERT_EQ(pack_buffer<Pair>(back.messages, 2, flag, 9), bytes);
  }
}

TEST(MessageBuffer, CapacityAndLengthErrors) {
  const MessageFormat f{1, 8};
  EXPECT_EQ(f.capacity(8 + 16 * 4), 4U);
  std::vector<Message<std::uint64_t>> five(5);
  EXPECT_THROW(pack_buffer<std::uint64_t>(five, 1, 0, 1, 8 + 16 * 4), ParameterError);
  auto bytes = pack_buffer<std::uint64_t>(std::span(five).first(2), 1, 0, 1);
  bytes.pop_back();
  EXPECT_THROW(unpack_buffer<std::uint64_t>(bytes), FormatError);
  EXPECT_THROW(decode_header(std::span(bytes).first(5)), FormatError);
}

TEST(BufferBuilder, SplitsAtCapacityAndFlushesRemainder) {
  std::vector<std::vector<std::byte>> out;
  auto sink = [&](std::vector<std::byte>&& b) { out.push_back(std::move(b)); };
  BufferBuilder builder(op::kRelay, {4, 8}, 8 + 16 * 3);
  for (GlobalId g = 0; g < 7; ++g) builder.append<double>(g, g * 0.5, sink);
  EXPECT_EQ(out.size(), 2U);
  builder.flush(sink);
  ASSERT_EQ(out.size(), 3U);
  std::vector<Message<double>> all;
  for (const auto& b : out) {
    const auto u = unpack_buffer<double>(b);
    EXPECT_EQ(u.header.op, op::kRelay);
    EXPECT_EQ(u.header.format_id, 4U);
    all.insert(all.end(), u.messages.begin(), u.messages.end());
  }
  ASSERT_EQ(all.size(), 7U);
  for (GlobalId g = 0; g < 7; ++g) EXPECT_EQ(all[g], (Message<double>{g, g * 0.5}));
  builder.flush(sink);
  EXPECT_EQ(out.size(), 3U);
  EXPECT_THROW(BufferBuilder(op::kRelay, {4, 8}, 16), ParameterError);
}

}  // namespace
}  // namespace gre
