#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcf/arith.hpp"

namespace lcf {

/// A finite sequence of non-negative integers. Entry i counts the halving
/// steps taken after the i-th tripling step of the circuit the tuple
/// encodes. The empty tuple is a legal value (it is the monoid identity);
/// evaluation and rotation reject it.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  Tuple(std::initializer_list<Entry> entries) : entries_(entries) {}

  /// Parses comma-separated decimal entries. Whitespace is ignored and one
  /// pair of surrounding parentheses is tolerated, so "0,3,2", " 0, 3 ,2 "
  /// and "(0,3,2)" all denote the same tuple. The empty string (or "()")
  /// is the empty tuple.
  static Tuple parse(std::string_view text);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }

  std::uint64_t entry_sum() const {
    std::uint64_t s = 0;
    for (Entry e : entries_) s = checked_add(s, e);
    return s;
  }

  bool uniform(Entry v) const {
    return !entries_.empty() &&
           std::all_of(entries_.begin(), entries_.end(),
                       [&](Entry e) { return e == v; });
  }

  bool contains(Entry v) const {
    return std::find(entries_.begin(), entries_.end(), v) != entries_.end();
  }

  /// "0,3,2" — the machine-readable form; parse() inverts it.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  /// "(0,3,2)" — the display form; parse() accepts it too.
  std::string display() const { return "(" + str() + ")"; }

  auto operator<=>(const Tuple&) const = default;

 private:
  std::vector<Entry> entries_;
};

inline Tuple Tuple::parse(std::string_view text) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  }
  if (text.empty()) return Tuple{};

  std::vector<Entry> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
    while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
    if (field.empty()) throw DomainError("tuple parse: empty entry");
    Entry value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw DomainError("tuple parse: entry out of range: " +
                        std::string(field));
    }
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw DomainError("tuple parse: invalid entry: " + std::string(field));
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Tuple(std::move(entries));
}

/// Left rotation applied k (mod n) times: rotate((a_1,...,a_n), 1) =
/// (a_2,...,a_n,a_1).
inline Tuple rotate(const Tuple& t, std::uint64_t k) {
  if (t.empty()) throw DomainError("rotate: empty tuple");
  std::vector<Entry> out = t.entries();
  const std::size_t n = out.size();
  const std::size_t shift = static_cast<std::size_t>(k % n);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift),
              out.end());
  return Tuple(std::move(out));
}

/// [R^0(t), ..., R^(n-1)(t)]; duplicates preserved, so a periodic tuple
/// reports its orbit with multiplicity n.
inline std::vector<Tuple> rotation_orbit(const Tuple& t) {
  if (t.empty()) throw DomainError("rotation_orbit: empty tuple");
  std::vector<Tuple> orbit;
  orbit.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) orbit.push_back(rotate(t, k));
  return orbit;
}

/// Booth's least-rotation algorithm: index of the lexicographically
/// smallest rotation, in O(n) comparisons.
inline std::size_t least_rotation_index(std::span<const Entry> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Entry sj = s[j % n];
    std::ptrdiff_t i = fail[j - best - 1];
    while (i != -1 && sj != s[(best + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(best + static_cast<std::size_t>(i) + 1) % n]) {
        best = j - static_cast<std::size_t>(i) - 1;
      }
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[best % n]) {
      if (sj < s[best % n]) best = j;
      fail[j - best] = -1;
    } else {
      fail[j - best] = i + 1;
    }
  }
  return best % n;
}

/// Lexicographically least rotation: constant on rotation orbits and
/// idempotent, which makes it the canonical cycle representative.
inline Tuple canonical_form(const Tuple& t) {
  if (t.empty()) throw DomainError("canonical_form: empty tuple");
  return rotate(t, least_rotation_index(t.entries()));
}

}  // namespace lcf
