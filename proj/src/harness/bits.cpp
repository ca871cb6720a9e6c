// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qhelab/harness/bits.hpp"

#include <charconv>

namespace qhelab {

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (Bit& b : bits_) b &= 1;
}

BitString::BitString(std::initializer_list<int> bits) {
  for (int b : bits) bits_.push_back(static_cast<Bit>(b & 1));
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

Bit BitString::parity() const {
  Bit p = 0;
  for (Bit b : bits_) p ^= b;
  return p;
}

std::string BitString::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string hex;
  const std::size_t nibbles = (bits_.size() + 3) / 4;
  for (std::size_t i = nibbles; i-- > 0;) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t idx = 4 * i + b;
      if (idx < bits_.size() && bits_[idx]) v |= 1 << b;
    }
    hex.push_back(digits[v]);
  }
  return std::to_string(bits_.size()) + ":" + hex;
}

BitString BitString::from_hex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("hexbits must look like <len>:<hex>");
  std::size_t len = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + colon, len);
  if (ec != std::errc() || p != text.data() + colon) throw std::invalid_argument("bad hexbits length");
  const std::string_view hex = text.substr(colon + 1);
  if (hex.size() != (len + 3) / 4) throw std::invalid_argument("hexbits length does not match digits");
  std::vector<Bit> bits(len, 0);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char ch = hex[hex.size() - 1 - k];
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else throw std::invalid_argument("bad hex digit");
    for (int b = 0; b < 4; ++b) {
      const std::size_t idx = 4 * k + b;
      if ((v >> b) & 1) {
        if (idx >= len) throw std::invalid_argument("hexbits has bits past its length");
        bits[idx] = 1;
      }
    }
  }
  return BitString(std::move(bits));
}

}  // namespace qhelab
