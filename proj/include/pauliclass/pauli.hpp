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

#include <array>
#include <bit>
#include <cctype>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pauliclass/errors.hpp"

namespace pauliclass {

/// Phase-free tensor product of single-site Paulis on `num_sites` qubits.
///
/// Sites are packed into symplectic bit masks: site i carries X when bit i of
/// the x mask is set, Z when bit i of the z mask is set and Y when both are.
/// Bits beyond `num_sites` are always zero, so equality of the masks is
/// equality of the strings. Sites are 0-based here; the text format is 1-based.
class PauliString {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxWords = 4;
  static constexpr std::size_t kMaxSites = kWordBits * kMaxWords;

  PauliString() = default;

  /// Identity string on `num_sites` qubits.
  explicit PauliString(std::size_t num_sites) : num_sites_(num_sites) {
    if (num_sites == 0 || num_sites > kMaxSites) {
      throw DimensionError("PauliString supports 1.." + std::to_string(kMaxSites) +
                           " sites, got " + std::to_string(num_sites));
    }
  }

  /// A single Pauli `symbol` (one of I, X, Y, Z) on `site`.
  static PauliString single(std::size_t num_sites, std::size_t site, char symbol) {
    PauliString p(num_sites);
    p.set(site, symbol);
    return p;
  }

  /// Build from raw masks. Words past the last are taken as zero.
  static PauliString from_masks(std::size_t num_sites, std::span<const std::uint64_t> x,
                                std::span<const std::uint64_t> z) {
    PauliString p(num_sites);
    for (std::size_t w = 0; w < p.num_words(); ++w) {
      p.x_[w] = w < x.size() ? x[w] : 0;
      p.z_[w] = w < z.size() ? z[w] : 0;
    }
    p.clear_padding();
    return p;
  }

  std::size_t num_sites() const { return num_sites_; }
  std::size_t num_words() const { return words_for(num_sites_); }

  static constexpr std::size_t words_for(std::size_t num_sites) {
    return (num_sites + kWordBits - 1) / kWordBits;
  }

  bool x_bit(std::size_t site) const { return (x_[site / kWordBits] >> (site % kWordBits)) & 1u; }
  bool z_bit(std::size_t site) const { return (z_[site / kWordBits] >> (site % kWordBits)) & 1u; }

  /// Symbol at `site`: 'I', 'X', 'Y' or 'Z'.
  char at(std::size_t site) const {
    check_site(site);
    static constexpr char kSymbols[4] = {'I', 'X', 'Z', 'Y'};
    return kSymbols[static_cast<int>(x_bit(site)) | (static_cast<int>(z_bit(site)) << 1)];
  }

  void set(std::size_t site, char symbol) {
    check_site(site);
    bool x = false;
    bool z = false;
    switch (std::toupper(static_cast<unsigned char>(symbol))) {
      case 'I': break;
      case 'X': x = true; break;
      case 'Y': x = z = true; break;
      case 'Z': z = true; break;
      default:
        throw ParseError(std::string("unknown Pauli symbol '") + symbol + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << (site % kWordBits);
    auto& xw = x_[site / kWordBits];
    auto& zw = z_[site / kWordBits];
    xw = x ? (xw | bit) : (xw & ~bit);
    zw = z ? (zw | bit) : (zw & ~bit);
  }

  std::span<const std::uint64_t> x_words() const { return {x_.data(), num_words()}; }
  std::span<const std::uint64_t> z_words() const { return {z_.data(), num_words()}; }

  /// Number of non-identity sites.
  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < num_words(); ++i) w += std::popcount(x_[i] | z_[i]);
    return w;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < num_words(); ++i) {
      if (x_[i] | z_[i]) return false;
    }
    return true;
  }

  /// True iff every non-identity factor sits on `site`.
  bool supported_only_on(std::size_t site) const {
    for (std::size_t i = 0; i < num_words(); ++i) {
      std::uint64_t m = x_[i] | z_[i];
      if (i == site / kWordBits) m &= ~(std::uint64_t{1} << (site % kWordBits));
      if (m) return false;
    }
    return true;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ num_sites_;
    for (std::size_t i = 0; i < num_words(); ++i) {
      h = mix(h ^ x_[i]);
      h = mix(h ^ z_[i]);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

  /// Lexicographic order on (num_sites, x mask words, z mask words).
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.num_sites_ <=> b.num_sites_; c != 0) return c;
    for (std::size_t i = 0; i < a.num_words(); ++i) {
      if (auto c = a.x_[i] <=> b.x_[i]; c != 0) return c;
    }
    for (std::size_t i = 0; i < a.num_words(); ++i) {
      if (auto c = a.z_[i] <=> b.z_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  friend PauliString operator^(const PauliString& a, const PauliString& b) {
    PauliString r = a;
    for (std::size_t i = 0; i < a.num_words(); ++i) {
      r.x_[i] ^= b.x_[i];
      r.z_[i] ^= b.z_[i];
    }
    return r;
  }

  static std::uint64_t mix(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return v;
  }

 private:
  void check_site(std::size_t site) const {
    if (site >= num_sites_) {
      throw DimensionError("site " + std::to_string(site + 1) + " out of range 1.." +
                           std::to_string(num_sites_));
    }
  }

  void clear_padding() {
    const std::size_t used = num_sites_ % kWordBits;
    if (used != 0) {
      const std::uint64_t mask = (std::uint64_t{1} << used) - 1;
      x_[num_words() - 1] &= mask;
      z_[num_words() - 1] &= mask;
    }
  }

  std::uint32_t num_sites_ = 0;
  std::array<std::uint64_t, kMaxWords> x_{};
  std::array<std::uint64_t, kMaxWords> z_{};
};

/// i^phase_power * magnitude * string. Magnitude 0 is the zero operator.
struct ScaledPauli {
  int phase_power = 0;
  double magnitude = 0.0;
  PauliString string;

  bool is_zero() const { return magnitude == 0.0; }

  std::complex<double> coefficient() const {
    static constexpr std::complex<double> kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return magnitude * kPowers[phase_power & 3];
  }
};

namespace detail {

inline void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.num_sites() != q.num_sites()) {
    throw DimensionError("Pauli strings on " + std::to_string(p.num_sites()) + " and " +
                         std::to_string(q.num_sites()) + " sites");
  }
}

/// Parity of the symplectic form over packed words.
inline bool anticommute_words(std::span<const std::uint64_t> px, std::span<const std::uint64_t> pz,
                              std::span<const std::uint64_t> qx, std::span<const std::uint64_t> qz) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < px.size(); ++i) acc ^= (px[i] & qz[i]) ^ (pz[i] & qx[i]);
  return std::popcount(acc) & 1;
}

/// Exponent k (mod 4) of i^k in sigma(p) * sigma(q) = i^k sigma(p xor q).
///
/// With sigma(x, z) = i^{xz} X^x Z^z per site, moving Z^{z1} past X^{x2}
/// gives (-1)^{z1 x2}, and re-expressing X^x Z^z removes i^{xz}.
inline int product_phase(const PauliString& p, const PauliString& q) {
  int k = 0;
  auto px = p.x_words(), pz = p.z_words(), qx = q.x_words(), qz = q.z_words();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const std::uint64_t rx = px[i] ^ qx[i];
    const std::uint64_t rz = pz[i] ^ qz[i];
    k += std::popcount(px[i] & pz[i]) + std::popcount(qx[i] & qz[i]) +
         2 * std::popcount(pz[i] & qx[i]) - std::popcount(rx & rz);
  }
  return ((k % 4) + 4) % 4;
}

}  // namespace detail

inline ScaledPauli multiply(const PauliString& p, const PauliString& q) {
  detail::require_same_size(p, q);
  return {detail::product_phase(p, q), 1.0, p ^ q};
}

inline bool commutes_with(const PauliString& p, const PauliString& q) {
  detail::require_same_size(p, q);
  return !detail::anticommute_words(p.x_words(), p.z_words(), q.x_words(), q.z_words());
}

/// [p, q] = pq - qp: zero when the strings commute, 2pq otherwise.
inline ScaledPauli commutator(const PauliString& p, const PauliString& q) {
  detail::require_same_size(p, q);
  if (!detail::anticommute_words(p.x_words(), p.z_words(), q.x_words(), q.z_words())) {
    return {0, 0.0, PauliString(p.num_sites())};
  }
  return {detail::product_phase(p, q), 2.0, p ^ q};
}

/// Parse either whitespace-separated `[XYZ]<site>` tokens (1-based, no
/// repeats; empty means identity) or a compact length-`num_sites` word over
/// {I,X,Y,Z} such as "ZZXI".
inline PauliString parse_pauli(std::string_view text, std::size_t num_sites) {
  PauliString p(num_sites);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) return p;

  const auto is_symbol = [](char c) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
  };
  if (tokens.size() == 1) {
    const auto word = tokens.front();
    bool compact = true;
    for (char c : word) compact = compact && is_symbol(c);
    if (compact) {
      if (word.size() != num_sites) {
        throw ParseError("Pauli word '" + std::string(word) + "' has length " +
                         std::to_string(word.size()) + ", expected " + std::to_string(num_sites));
      }
      for (std::size_t s = 0; s < num_sites; ++s) p.set(s, word[s]);
      return p;
    }
  }

  std::vector<bool> seen(num_sites, false);
  for (auto tok : tokens) {
    const char sym = static_cast<char>(std::toupper(static_cast<unsigned char>(tok.front())));
    if (sym != 'X' && sym != 'Y' && sym != 'Z') {
      throw ParseError("bad Pauli token '" + std::string(tok) + "'");
    }
    const auto digits = tok.substr(1);
    if (digits.empty() || digits.size() > 9) {
      throw ParseError("bad site index in token '" + std::string(tok) + "'");
    }
    std::size_t site = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("bad site index in token '" + std::string(tok) + "'");
      }
      site = site * 10 + static_cast<std::size_t>(c - '0');
    }
    if (site < 1 || site > num_sites) {
      throw ParseError("site index " + std::to_string(site) + " out of range 1.." +
                       std::to_string(num_sites));
    }
    if (seen[site - 1]) throw ParseError("duplicate site index " + std::to_string(site));
    seen[site - 1] = true;
    p.set(site - 1, sym);
  }
  return p;
}

/// Token form, e.g. "Z1 Z2 X3". The identity formats as "".
inline std::string format_pauli(const PauliString& p) {
  std::string out;
  for (std::size_t s = 0; s < p.num_sites(); ++s) {
    const char c = p.at(s);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(s + 1);
  }
  return out;
}

/// Compact form, e.g. "ZZXI".
inline std::string to_word(const PauliString& p) {
  std::string out(p.num_sites(), 'I');
  for (std::size_t s = 0; s < p.num_sites(); ++s) out[s] = p.at(s);
  return out;
}

}  // namespace pauliclass

template <>
struct std::hash<pauliclass::PauliString> {
  std::size_t operator()(const pauliclass::PauliString& p) const noexcept { return p.hash(); }
};
