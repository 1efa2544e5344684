#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// A finite window of a two-letter configuration. `origin` is the lattice
/// index of the first symbol.
class Word {
 public:
  Word() = default;
  /// Throws ErrorKind::invalid_argument on any symbol other than 0 or 1.
  explicit Word(std::vector<std::uint8_t> symbols, std::int64_t origin = 0);

  /// Parses an ASCII string of '0'/'1'.
  static Word parse(std::string_view bits, std::int64_t origin = 0);

  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  std::int64_t origin() const { return origin_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::uint8_t operator[](std::size_t k) const { return symbols_[k]; }

  std::string str() const;
  std::size_t count_ones() const;
  /// Offsets (0-based, relative to origin) of every 1.
  std::vector<std::size_t> ones() const;
  Word slice(std::size_t offset, std::size_t length) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
  std::int64_t origin_ = 0;
};

/// Factors are compared by content only, so they are kept as plain strings.
using FactorSet = std::set<std::string>;

}  // namespace sturmian
