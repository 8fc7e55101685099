#include "rlab/groups/word.hpp"

#include <cctype>
#include <cstdlib>

namespace rlab {

GroupWord::GroupWord(std::vector<Syllable> syllables) : s_(std::move(syllables)) { reduce(); }

void GroupWord::reduce() {
  std::vector<Syllable> out;
  out.reserve(s_.size());
  for (auto& syl : s_) {
    if (syl.exp == 0) continue;
    if (!out.empty() && out.back().gen == syl.gen) {
      out.back().exp += syl.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(syl));
    }
  }
  s_ = std::move(out);
}

long GroupWord::length() const {
  long n = 0;
  for (const auto& syl : s_) n += std::labs(syl.exp);
  return n;
}

long GroupWord::exponent_sum(const std::string& gen) const {
  long n = 0;
  for (const auto& syl : s_)
    if (syl.gen == gen) n += syl.exp;
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<Syllable> out(s_.rbegin(), s_.rend());
  for (auto& syl : out) syl.exp = -syl.exp;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GroupWord out;
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

GroupWord GroupWord::cyclically_reduced() const {
  std::vector<Syllable> s = s_;
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
  return GroupWord(std::move(s));
}

GroupWord GroupWord::rotated(long k) const {
  long n = length();
  if (n == 0) return *this;
  k = ((k % n) + n) % n;
  std::vector<Syllable> head, tail;
  long seen = 0;
  for (const auto& syl : s_) {
    long a = std::labs(syl.exp), sign = syl.exp > 0 ? 1 : -1;
    if (seen + a <= k) {
      head.push_back(syl);
    } else if (seen >= k) {
      tail.push_back(syl);
    } else {
      head.push_back({syl.gen, sign * (k - seen)});
      tail.push_back({syl.gen, sign * (seen + a - k)});
    }
    seen += a;
  }
  tail.insert(tail.end(), head.begin(), head.end());
  return GroupWord(std::move(tail));
}

std::pair<GroupWord, GroupWord> GroupWord::split_at(std::size_t n) const {
  if (n > s_.size()) throw std::out_of_range("split point beyond word length");
  return {GroupWord({s_.begin(), s_.begin() + n}), GroupWord({s_.begin() + n, s_.end()})};
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Syllable> s = a.s_;
  s.insert(s.end(), b.s_.begin(), b.s_.end());
  return GroupWord(std::move(s));
}

bool operator<(const GroupWord& a, const GroupWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.to_string() < b.to_string();
}

std::string GroupWord::to_string() const {
  if (s_.empty()) return "1";
  std::string out;
  for (const auto& syl : s_) {
    if (!out.empty()) out += ' ';
    out += syl.gen;
    if (syl.exp != 1) out += "^" + std::to_string(syl.exp);
  }
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& t) : t_(t) {}

  GroupWord parse() {
    GroupWord w = product();
    skip();
    if (i_ < t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw WordParseError(msg, i_ + 1); }

  void skip() {
    while (i_ < t_.size() && (std::isspace(static_cast<unsigned char>(t_[i_])) || t_[i_] == '*' ||
                              t_[i_] == '.'))
      ++i_;
  }

  GroupWord product() {
    GroupWord w;
    for (;;) {
      skip();
      if (i_ >= t_.size() || t_[i_] == ')') return w;
      w = w * factor();
    }
  }

  GroupWord factor() {
    GroupWord base;
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      base = product();
      skip();
      if (i_ >= t_.size() || t_[i_] != ')') fail("missing ')'");
      ++i_;
    } else if (c == '1') {
      ++i_;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      bool inv = std::isupper(static_cast<unsigned char>(c));
      ++i_;
      while (i_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_'))
        name += t_[i_++];
      base = GroupWord::letter(name, inv ? -1 : 1);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    while (i_ < t_.size() && t_[i_] == '^') {
      ++i_;
      base = base.pow(exponent());
    }
    return base;
  }

  long exponent() {
    bool paren = i_ < t_.size() && t_[i_] == '(';
    if (paren) ++i_;
    long sign = 1;
    if (i_ < t_.size() && (t_[i_] == '-' || t_[i_] == '+')) sign = t_[i_++] == '-' ? -1 : 1;
    std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (start == i_) fail("expected exponent");
    if (i_ - start > 9) fail("exponent too large");
    long v = std::stol(t_.substr(start, i_ - start));
    if (paren) {
      if (i_ >= t_.size() || t_[i_] != ')') fail("missing ')'");
      ++i_;
    }
    return sign * v;
  }

  const std::string& t_;
  std::size_t i_ = 0;
};

}  // namespace

GroupWord parse_word(const std::string& text) { return WordParser(text).parse(); }

}  // namespace rlab
