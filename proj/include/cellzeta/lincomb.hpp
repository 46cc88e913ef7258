#pragma once

// Linear combinations with exact rational coefficients over an ordered basis
// type B. Terms are kept in a std::map so iteration order (and hence printing
// and serialization) is canonical. Zero coefficients are never stored.

#include <map>
#include <string>
#include <utility>

#include "cellzeta/rational.hpp"

namespace cellzeta {

template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;
  explicit LinComb(const B& b) { terms_[b] = 1; }
  LinComb(const B& b, Rational c) {
    if (c != 0) terms_[b] = std::move(c);
  }

  static LinComb zero() { return LinComb(); }

  void add(const B& b, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= k;
    }
    return *this;
  }

  friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
  friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
  friend LinComb operator*(const Rational& k, LinComb x) { return x *= k; }
  friend LinComb operator-(LinComb x) { return x *= Rational(-1); }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }

  friend bool operator==(const LinComb& x, const LinComb& y) {
    return x.terms_ == y.terms_;
  }

  // Renders with a basis printer, e.g. "2*123 - 1/2*132".
  template <class Printer>
  std::string str(Printer p) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      Rational a = c < 0 ? Rational(-c) : c;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (a != 1) out += rat_to_string(a) + "*";
      out += p(b);
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace cellzeta
