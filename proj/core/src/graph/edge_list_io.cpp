#include "gre/graph/edge_list_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <string>
#include <string_view>

#include "gre/detail/byte_io.hpp"
#include "gre/error.hpp"

namespace gre {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

// Splits off the next whitespace-delimited token; empty when exhausted.
std::string_view next_token(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && is_space(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !is_space(rest[e])) ++e;
  const auto token = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return token;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char* field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + field + " '" + std::string(token) + "'");
  }
  return value;
}

bool has_binary_extension(const std::filesystem::path& path) {
  return path.extension() == ".bin";
}

}  // namespace

EdgeStream read_edge_list(std::istream& in, bool weighted) {
  EdgeStream edges(weighted);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    const auto first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    const auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected \"u v\" or \"u v w\"");
    const auto u = parse_number<GlobalId>(first, line_no, "source");
    const auto v = parse_number<GlobalId>(second, line_no, "target");
    const auto third = next_token(rest);
    if (!next_token(rest).empty()) throw ParseError(line_no, "too many fields");
    if (weighted) {
      if (third.empty()) throw ParseError(line_no, "missing weight");
      edges.add(u, v, parse_number<Weight>(third, line_no, "weight"));
    } else {
      if (!third.empty()) parse_number<Weight>(third, line_no, "weight");
      edges.add(u, v);
    }
  }
  return edges;
}

EdgeStream read_edge_list(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());
  return read_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const EdgeStream& edges) {
  std::array<char, 24> buf{};
  auto put = [&](std::uint64_t value, char sep) {
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.write(buf.data(), r.ptr - buf.data());
    out.put(sep);
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    put(edges.source(e), ' ');
    if (edges.weighted()) {
      put(edges.target(e), ' ');
      put(edges.weight(e), '\n');
    } else {
      put(edges.target(e), '\n');
    }
  }
}

void write_edge_list(const std::filesystem::path& path, const EdgeStream& edges) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list " + path.string());
  write_edge_list(out, edges);
  if (!out) throw IoError("write failed for " + path.string());
}

EdgeStream read_binary_edge_list(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open edge list " + path.string());
  in.seekg(0, std::ios::end);
  const auto bytes = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  if (bytes % kBinaryEdgeRecordSize != 0) {
    throw FormatError(path.string() + ": size is not a multiple of the 20-byte edge record");
  }
  std::vector<std::byte> raw(bytes);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(bytes));
  if (!in) throw IoError("read failed for " + path.string());

  EdgeStream edges(weighted);
  edges.reserve(bytes / kBinaryEdgeRecordSize);
  for (std::size_t off = 0; off < bytes; off += kBinaryEdgeRecordSize) {
    const auto u = detail::load<std::uint64_t>(raw.data() + off);
    const auto v = detail::load<std::uint64_t>(raw.data() + off + 8);
    const auto w = detail::load<std::uint32_t>(raw.data() + off + 16);
    edges.add(u, v, w);
  }
  return edges;
}

void write_binary_edge_list(const std::filesystem::path& path, const EdgeStream& edges) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write edge list " + path.string());
  std::vector<std::byte> raw(edges.size() * kBinaryEdgeRecordSize);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::byte* rec = raw.data() + e * kBinaryEdgeRecordSize;
    detail::store<std::uint64_t>(rec, edges.source(e));
    detail::store<std::uint64_t>(rec + 8, edges.target(e));
    detail::store<std::uint32_t>(rec + 16, edges.weighted() ? edges.weight(e) : 0U);
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

EdgeStream load_edges(const std::filesystem::path& path, bool weighted) {
  return has_binary_extension(path) ? read_binary_edge_list(path, weighted)
                                    : read_edge_list(path, weighted);
}

void save_edges(const std::filesystem::path& path, const EdgeStream& edges) {
  if (has_binary_extension(path)) {
    write_binary_edge_list(path, edges);
  } else {
    write_edge_list(path, edges);
  }
}

}  // namespace gre
