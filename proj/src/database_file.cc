// Copyright 2026 The ldpir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iterator>
#include <string>

#include "ldpir/encode.h"

namespace ldpir {
namespace {

constexpr char kMagic[] = "LDPIR1\n";
constexpr size_t kMagicLen = sizeof(kMagic) - 1;

// Reads a decimal line terminated by '\n' starting at pos.
u64 read_decimal_line(std::span<const std::uint8_t> bytes, size_t& pos) {
  const size_t start = pos;
  u64 value = 0;
  while (pos < bytes.size() && bytes[pos] != '\n') {
    const std::uint8_t ch = bytes[pos];
    if (ch < '0' || ch > '9' || pos - start >= 20) throw FormatError("malformed decimal header field");
    const u64 digit = ch - '0';
    if (value > (UINT64_MAX - digit) / 10) throw FormatError("header field overflows 64 bits");
    value = value * 10 + digit;
    ++pos;
  }
  if (pos == start || pos == bytes.size()) throw FormatError("truncated header");
  ++pos;  // newline
  return value;
}

}  // namespace

std::vector<std::uint8_t> encode_database_file(const FieldModulus& mod,
                                               std::span<const FieldElement> x) {
  std::string header = kMagic;
  header += std::to_string(mod.p()) + "\n" + std::to_string(x.size()) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const int width = mod.byte_width();
  out.reserve(out.size() + x.size() * width);
  for (const auto& e : x) {
    if (!(e.modulus() == mod)) throw ModulusMismatch("record from another field");
    u64 v = e.value();
    for (int b = 0; b < width; ++b, v >>= 8) out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

DatabaseFile decode_database_file(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagicLen || !std::equal(kMagic, kMagic + kMagicLen, bytes.begin())) {
    throw FormatError("bad magic");
  }
  size_t pos = kMagicLen;
  const u64 p = read_decimal_line(bytes, pos);
  const u64 n = read_decimal_line(bytes, pos);
  FieldModulus mod(p);
  const size_t width = static_cast<size_t>(mod.byte_width());
  if ((bytes.size() - pos) / width != n || (bytes.size() - pos) % width != 0) {
    throw FormatError("body length does not match n");
  }
  DatabaseFile out{mod, {}};
  out.x.reserve(n);
  for (u64 j = 0; j < n; ++j) {
    u64 v = 0;
    for (size_t b = width; b-- > 0;) v = (v << 8) | bytes[pos + b];
    pos += width;
    if (v >= p) throw FormatError("record " + std::to_string(j) + " is not a canonical residue");
    out.x.push_back(FieldElement::from_canonical(mod, v));
  }
  return out;
}

void write_database_file(const std::filesystem::path& path, const FieldModulus& mod,
                         std::span<const FieldElement> x) {
  const auto bytes = encode_database_file(mod, x);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

DatabaseFile read_database_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return decode_database_file(bytes);
}

}  // namespace ldpir
