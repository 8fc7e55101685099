#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rlab {

struct Syllable {
  std::string gen;
  long exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Group word as a list of syllables g^e. Constructors and the algebraic
/// helpers below keep words freely reduced (adjacent syllables differ, e != 0).
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Syllable> syllables);
  static GroupWord letter(const std::string& gen, long exp = 1) { return GroupWord({{gen, exp}}); }

  const std::vector<Syllable>& syllables() const { return s_; }
  bool empty() const { return s_.empty(); }
  std::size_t size() const { return s_.size(); }
  /// Letter length: sum of |exponents|.
  long length() const;
  /// Exponent sum of one generator.
  long exponent_sum(const std::string& gen) const;

  GroupWord inverse() const;
  GroupWord pow(long e) const;
  /// Cyclically reduced conjugate (drops matching ends).
  GroupWord cyclically_reduced() const;
  /// Cyclic rotation by `k` letters.
  GroupWord rotated(long k) const;
  /// First `n` syllables and the rest.
  std::pair<GroupWord, GroupWord> split_at(std::size_t n) const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend bool operator<(const GroupWord& a, const GroupWord& b);

  /// Text form, e.g. "b a^-2 b a^-1 b^2"; the empty word prints as "1".
  std::string to_string() const;

 private:
  void reduce();
  std::vector<Syllable> s_;
};

struct WordParseError : std::invalid_argument {
  WordParseError(const std::string& msg, std::size_t column)
      : std::invalid_argument(msg + " at column " + std::to_string(column)), column(column) {}
  std::size_t column;
};

/// Parses the word DSL: a generator is a lowercase letter followed by digits
/// or underscores (x1, x_2); an uppercase letter denotes the inverse of its
/// lowercase generator; `^k`, `^-k`, `^(-k)` give exponents; parentheses group;
/// `*`, `.` and whitespace separate factors; `1` is the identity.
GroupWord parse_word(const std::string& text);

}  // namespace rlab
