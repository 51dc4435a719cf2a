#include "hcube/bitstring.hpp"

#include "hcube/errors.hpp"

namespace hcube {

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1')
      out.set(i);
    else if (c != '0')
      throw PreconditionError(PreconditionError::Kind::kParse,
                              "bit string contains '" + std::string(1, c) + "' at position " + std::to_string(i));
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t size) {
  BitString out(size);
  if (size == 0) return out;
  if (size < 64) value &= (std::uint64_t{1} << size) - 1;
  out.words_[0] = size == 64 ? value : value << (64 - size);
  return out;
}

std::uint64_t BitString::to_uint() const {
  if (size_ == 0) return 0;
  return size_ == 64 ? words_[0] : words_[0] >> (64 - size_);
}

BitString BitString::complemented() const {
  BitString out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

void BitString::clear_tail() noexcept {
  const std::size_t tail = size_ & 63;
  if (tail != 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} << (64 - tail);
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

}  // namespace hcube
