// Copyright 2026 The qhelab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qhelab/qsim/types.hpp"

namespace qhelab {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<Bit> bits);
  BitString(std::initializer_list<int> bits);

  // "<len>:<hex>", most significant nibble first, bit 0 is the first bit.
  static BitString from_hex(std::string_view text);
  std::string to_hex() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_.at(i); }
  void push_back(Bit b) { bits_.push_back(b & 1); }
  void append(const BitString& other);
  const std::vector<Bit>& bits() const { return bits_; }
  Bit parity() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<Bit> bits_;
};

// A value owned by one party. Only the owner may read it through reveal();
// omniscient() exists for audits that model both parties at once. There is
// no conversion to BitString, so a secret cannot be placed in a message
// without the owner deliberately deriving public bits from it.
template <class T>
class Secret {
 public:
  Secret(Party owner, T value) : owner_(owner), value_(std::move(value)) {}

  Party owner() const { return owner_; }
  const T& reveal(Party viewer) const {
    if (viewer != owner_) throw std::logic_error(std::string("secret read by ") + party_name(viewer));
    return value_;
  }
  const T& omniscient() const { return value_; }

 private:
  Party owner_;
  T value_;
};

}  // namespace qhelab
