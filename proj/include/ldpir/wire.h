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

#pragma once

// Bit-exact message encoding.
//   Query:  0x51 | m (u32 LE) | m residues
//   Answer: 0x41 | 0x01 | m+1 residues (u first, then v)
//   Silent: 0x41 | 0x00
// Each residue is byte_width() bytes, little-endian.

#include <cstdint>
#include <span>
#include <vector>

#include "ldpir/protocol.h"

namespace ldpir {

inline constexpr std::uint8_t kQueryTag = 0x51;
inline constexpr std::uint8_t kAnswerTag = 0x41;
inline constexpr size_t kQueryHeaderBytes = 5;
inline constexpr size_t kAnswerHeaderBytes = 2;

std::vector<std::uint8_t> serialize_query(const Query& q, const FieldModulus& mod);
// Throws WireFormatError on a bad tag, length or non-canonical residue.
Query deserialize_query(std::span<const std::uint8_t> bytes, const FieldModulus& mod);

std::vector<std::uint8_t> serialize_answer(const Answer& a, const FieldModulus& mod);
// m is the expected gradient length.
Answer deserialize_answer(std::span<const std::uint8_t> bytes, const FieldModulus& mod, int m);

}  // namespace ldpir
