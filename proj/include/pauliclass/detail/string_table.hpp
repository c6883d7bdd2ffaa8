// Copyright 2026 The pauliclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pauliclass/pauli.hpp"

namespace pauliclass::detail {

/// Insert-only hash set of Pauli strings stored as packed rows.
///
/// Each row holds the x words followed by the z words of one string. Rows
/// are addressed by insertion index; an open-addressing table of 32-bit
/// indices (linear probing, load <= 1/2) provides lookup. Compared with a
/// node-based set this keeps a 10^7-member class of short strings at about
/// 16 bytes per member plus the index.
class StringTable {
 public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::size_t kMaxRowWords = 2 * PauliString::kMaxWords;

  StringTable() = default;
  explicit StringTable(std::size_t num_sites)
      : num_sites_(num_sites), words_(PauliString::words_for(num_sites)) {
    slots_.assign(16, kEmpty);
  }

  std::size_t num_sites() const { return num_sites_; }
  std::size_t words() const { return words_; }
  std::size_t stride() const { return 2 * words_; }
  std::size_t size() const { return stride() == 0 ? 0 : data_.size() / stride(); }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * stride(), stride()};
  }

  PauliString get(std::size_t i) const {
    auto r = row(i);
    return PauliString::from_masks(num_sites_, r.first(words_), r.subspan(words_, words_));
  }

  static void pack(const PauliString& p, std::span<std::uint64_t> out) {
    const auto w = p.num_words();
    std::copy_n(p.x_words().begin(), w, out.begin());
    std::copy_n(p.z_words().begin(), w, out.begin() + static_cast<std::ptrdiff_t>(w));
  }

  void reserve(std::size_t n) {
    data_.reserve(n * stride());
    std::size_t cap = slots_.size();
    while (cap < 2 * n) cap *= 2;
    if (cap != slots_.size()) rehash(cap);
  }

  std::optional<std::size_t> find(std::span<const std::uint64_t> r) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_row(r) & mask;; s = (s + 1) & mask) {
      const auto idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (equal_row(idx, r)) return idx;
    }
  }

  std::optional<std::size_t> find(const PauliString& p) const {
    if (p.num_sites() != num_sites_) return std::nullopt;
    std::array<std::uint64_t, kMaxRowWords> buf{};
    pack(p, std::span(buf).first(stride()));
    return find(std::span<const std::uint64_t>(buf.data(), stride()));
  }

  struct InsertResult {
    std::size_t index = 0;
    bool inserted = false;
    bool rejected = false;  // new row but `may_grow` was false
  };

  /// Look up `r` and append it when absent and `may_grow` allows.
  InsertResult insert(std::span<const std::uint64_t> r, bool may_grow = true) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_row(r) & mask;
    for (;; s = (s + 1) & mask) {
      const auto idx = slots_[s];
      if (idx == kEmpty) break;
      if (equal_row(idx, r)) return {idx, false, false};
    }
    if (!may_grow) return {0, false, true};
    const std::size_t idx = size();
    if (idx >= kEmpty) throw Error("string table exceeds 2^32 - 1 members");
    data_.insert(data_.end(), r.begin(), r.end());
    slots_[s] = static_cast<std::uint32_t>(idx);
    if (2 * size() > slots_.size()) rehash(2 * slots_.size());
    return {idx, true, false};
  }

  InsertResult insert(const PauliString& p, bool may_grow = true) {
    std::array<std::uint64_t, kMaxRowWords> buf{};
    pack(p, std::span(buf).first(stride()));
    return insert(std::span<const std::uint64_t>(buf.data(), stride()), may_grow);
  }

  /// Reorder rows so that get(0) < get(1) < ... in PauliString order.
  void sort() {
    const std::size_t n = size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(row(a).begin(), row(a).end(), row(b).begin(),
                                          row(b).end());
    });
    std::vector<std::uint64_t> sorted;
    sorted.reserve(data_.size());
    for (auto i : order) {
      auto r = row(i);
      sorted.insert(sorted.end(), r.begin(), r.end());
    }
    data_ = std::move(sorted);
    rehash(slots_.size());
  }

 private:
  std::size_t hash_row(std::span<const std::uint64_t> r) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (auto w : r) h = PauliString::mix(h ^ w);
    return static_cast<std::size_t>(h);
  }

  bool equal_row(std::size_t idx, std::span<const std::uint64_t> r) const {
    const auto* p = data_.data() + idx * stride();
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (p[k] != r[k]) return false;
    }
    return true;
  }

  void rehash(std::size_t capacity) {
    slots_.assign(capacity, kEmpty);
    const std::size_t mask = capacity - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t s = hash_row(row(i)) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint32_t>(i);
    }
  }

  std::size_t num_sites_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace pauliclass::detail
