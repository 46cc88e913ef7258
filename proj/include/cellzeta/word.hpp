#pragma once

// Words over a small integer alphabet, with all letters distinct.
//
// Letters are positive 8-bit values. Alphabet letters are 1..m; auxiliary
// letters (edge markers introduced when cutting polygons) are assigned values
// above the working alphabet so that every fresh marker sorts after all
// existing letters. A word holds at most kMaxLen letters, which covers every
// size this library works at.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellzeta {

using Letter = std::uint8_t;

class Word {
 public:
  static constexpr int kMaxLen = 16;

  Word() = default;
  Word(std::initializer_list<int> ls) {
    for (int l : ls) push_back(static_cast<Letter>(l));
  }
  explicit Word(const std::vector<Letter>& ls) {
    for (Letter l : ls) push_back(l);
  }

  // Parses compact digit notation, e.g. "13524". Only valid for letters 1..9.
  static Word parse(const std::string& s) {
    Word w;
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad word literal: " + s);
      w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter operator[](int i) const { return a_[i]; }
  Letter& operator[](int i) { return a_[i]; }

  void push_back(Letter l) {
    if (len_ >= kMaxLen) throw std::length_error("word too long");
    a_[len_++] = l;
  }

  const Letter* begin() const { return a_.data(); }
  const Letter* end() const { return a_.data() + len_; }

  Word subword(int from, int count) const {
    Word w;
    for (int i = 0; i < count; ++i) w.push_back(a_[from + i]);
    return w;
  }

  Word reversed() const {
    Word w;
    for (int i = len_ - 1; i >= 0; --i) w.push_back(a_[i]);
    return w;
  }

  Word concat(const Word& o) const {
    Word w = *this;
    for (Letter l : o) w.push_back(l);
    return w;
  }

  bool contains(Letter l) const {
    for (Letter x : *this)
      if (x == l) return true;
    return false;
  }

  int find(Letter l) const {
    for (int i = 0; i < len_; ++i)
      if (a_[i] == l) return i;
    return -1;
  }

  // Letters as a sorted vector (the underlying set).
  std::vector<Letter> letter_set() const {
    std::vector<Letter> v(begin(), end());
    std::sort(v.begin(), v.end());
    return v;
  }

  bool shares_letter(const Word& o) const {
    for (Letter l : *this)
      if (o.contains(l)) return true;
    return false;
  }

  // Packs into 64 bits (4 bits per letter requires letters <= 15 and len <= 16
  // with a separate length); used as a cache key for words over alphabets of
  // at most 15 letters.
  std::uint64_t pack() const {
    std::uint64_t k = 0;
    for (int i = 0; i < len_; ++i) k = (k << 4) | (a_[i] & 0xF);
    return k | (static_cast<std::uint64_t>(len_) << 60);
  }

  std::string str() const {
    std::string s;
    for (Letter l : *this) {
      if (l <= 9) {
        s += static_cast<char>('0' + l);
      } else {
        s += '(';
        s += std::to_string(static_cast<int>(l));
        s += ')';
      }
    }
    return s;
  }

  friend auto operator<=>(const Word& x, const Word& y) {
    for (int i = 0; i < x.len_ && i < y.len_; ++i) {
      if (x.a_[i] != y.a_[i]) return x.a_[i] <=> y.a_[i];
    }
    return x.len_ <=> y.len_;
  }
  friend bool operator==(const Word& x, const Word& y) {
    if (x.len_ != y.len_) return false;
    for (int i = 0; i < x.len_; ++i)
      if (x.a_[i] != y.a_[i]) return false;
    return true;
  }

 private:
  std::array<Letter, kMaxLen> a_{};
  std::uint8_t len_ = 0;
};

// The identity word 1,2,...,m.
inline Word identity_word(int m) {
  Word w;
  for (int i = 1; i <= m; ++i) w.push_back(static_cast<Letter>(i));
  return w;
}

// True if the sorted letter set is a block of consecutive integers.
inline bool is_consecutive_set(const std::vector<Letter>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace cellzeta
