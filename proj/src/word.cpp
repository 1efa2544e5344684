#include "sturmian/word.hpp"

#include <algorithm>

#include "sturmian/error.hpp"

namespace sturmian {

Word::Word(std::vector<std::uint8_t> symbols, std::int64_t origin)
    : symbols_(std::move(symbols)), origin_(origin) {
  if (std::any_of(symbols_.begin(), symbols_.end(), [](std::uint8_t s) { return s > 1; })) {
    throw Error(ErrorKind::invalid_argument, "word symbols must be 0 or 1");
  }
}

Word Word::parse(std::string_view bits, std::int64_t origin) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorKind::invalid_argument, "word must consist of '0'/'1', got '" + std::string(bits) + "'");
    }
    symbols.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Word(std::move(symbols), origin);
}

std::string Word::str() const {
  std::string out(symbols_.size(), '0');
  for (std::size_t k = 0; k < symbols_.size(); ++k) out[k] = static_cast<char>('0' + symbols_[k]);
  return out;
}

std::size_t Word::count_ones() const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> Word::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (symbols_[k]) out.push_back(k);
  }
  return out;
}

Word Word::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > symbols_.size()) throw Error(ErrorKind::empty_window, "slice out of range");
  return Word(std::vector<std::uint8_t>(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                                        symbols_.begin() + static_cast<std::ptrdiff_t>(offset + length)),
              origin_ + static_cast<std::int64_t>(offset));
}

}  // namespace sturmian
