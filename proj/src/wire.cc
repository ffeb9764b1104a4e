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

#include "ldpir/wire.h"

#include <string>

namespace ldpir {
namespace {

std::uint8_t* put_element(std::uint8_t* out, u64 v, int width) {
  for (int b = 0; b < width; ++b, v >>= 8) *out++ = static_cast<std::uint8_t>(v & 0xFF);
  return out;
}

u64 get_raw(const std::uint8_t* in, int width) {
  u64 v = 0;
  for (int b = width; b-- > 0;) v = (v << 8) | in[b];
  return v;
}

template <int W>
void get_fixed(const std::uint8_t* in, std::span<u64> out, u64 p, size_t pos) {
  for (size_t c = 0; c < out.size(); ++c, in += W) {
    const u64 v = get_raw(in, W);
    if (v >= p) throw WireFormatError("non-canonical residue at byte " + std::to_string(pos + c * W));
    out[c] = v;
  }
}

// Decodes residues starting at `pos` into `out`.
void get_elements(std::span<const std::uint8_t> bytes, size_t pos, int width, std::span<u64> out, u64 p) {
  const std::uint8_t* in = bytes.data() + pos;
  switch (width) {
    case 1: return get_fixed<1>(in, out, p, pos);
    case 2: return get_fixed<2>(in, out, p, pos);
    case 3: return get_fixed<3>(in, out, p, pos);
    case 4: return get_fixed<4>(in, out, p, pos);
    case 5: return get_fixed<5>(in, out, p, pos);
    case 6: return get_fixed<6>(in, out, p, pos);
    case 7: return get_fixed<7>(in, out, p, pos);
    default: return get_fixed<8>(in, out, p, pos);
  }
}

}  // namespace

std::vector<std::uint8_t> serialize_query(const Query& q, const FieldModulus& mod) {
  if (!(q.q.modulus() == mod)) throw ModulusMismatch("query from another field");
  const int width = mod.byte_width();
  std::vector<std::uint8_t> out(kQueryHeaderBytes + q.q.size() * width);
  out[0] = kQueryTag;
  std::uint8_t* cur = put_element(out.data() + 1, q.q.size(), 4);
  for (u64 e : q.q.raw()) cur = put_element(cur, e, width);
  return out;
}

Query deserialize_query(std::span<const std::uint8_t> bytes, const FieldModulus& mod) {
  if (bytes.size() < kQueryHeaderBytes || bytes[0] != kQueryTag) throw WireFormatError("bad query header");
  std::uint32_t m = 0;
  for (int b = 3; b >= 0; --b) m = (m << 8) | bytes[1 + b];
  const size_t width = static_cast<size_t>(mod.byte_width());
  if (bytes.size() != kQueryHeaderBytes + static_cast<size_t>(m) * width) {
    throw WireFormatError("query length does not match m=" + std::to_string(m));
  }
  Query q{FieldVector(mod, m)};
  get_elements(bytes, kQueryHeaderBytes, static_cast<int>(width), q.q.raw(), mod.p());
  return q;
}

std::vector<std::uint8_t> serialize_answer(const Answer& a, const FieldModulus& mod) {
  if (!a) return {kAnswerTag, 0x00};
  if (!(a->v.modulus() == mod) || !(a->u.modulus() == mod)) throw ModulusMismatch("answer from another field");
  const int width = mod.byte_width();
  std::vector<std::uint8_t> out(kAnswerHeaderBytes + (a->v.size() + 1) * width);
  out[0] = kAnswerTag;
  out[1] = 0x01;
  std::uint8_t* cur = put_element(out.data() + kAnswerHeaderBytes, a->u.value(), width);
  for (u64 e : a->v.raw()) cur = put_element(cur, e, width);
  return out;
}

Answer deserialize_answer(std::span<const std::uint8_t> bytes, const FieldModulus& mod, int m) {
  if (bytes.size() < kAnswerHeaderBytes || bytes[0] != kAnswerTag) throw WireFormatError("bad answer header");
  if (bytes[1] == 0x00) {
    if (bytes.size() != kAnswerHeaderBytes) throw WireFormatError("silent marker carries a payload");
    return std::nullopt;
  }
  if (bytes[1] != 0x01) throw WireFormatError("unknown answer presence flag");
  const size_t width = static_cast<size_t>(mod.byte_width());
  if (m < 0 || bytes.size() != kAnswerHeaderBytes + (static_cast<size_t>(m) + 1) * width) {
    throw WireFormatError("answer length does not match m=" + std::to_string(m));
  }
  u64 u = 0;
  get_elements(bytes, kAnswerHeaderBytes, static_cast<int>(width), std::span<u64>(&u, 1), mod.p());
  Response r{FieldElement::from_canonical(mod, u), FieldVector(mod, static_cast<size_t>(m))};
  get_elements(bytes, kAnswerHeaderBytes + width, static_cast<int>(width), r.v.raw(), mod.p());
  return r;
}

}  // namespace ldpir
