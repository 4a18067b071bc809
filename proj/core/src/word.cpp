#include "thinlat/word.hpp"

#include <sstream>
#include <stdexcept>

namespace thinlat {

Word::Word(std::vector<Letter> letters) {
  for (Letter l : letters) push(l);
}

void Word::push(Letter l) {
  if (!l_.empty() && l_.back() == thinlat::inverse(l))
    l_.pop_back();
  else
    l_.push_back(l);
}

void Word::pop_back() {
  if (!l_.empty()) l_.pop_back();
}

Word Word::inverse() const {
  Word r;
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) r.l_.push_back(thinlat::inverse(*it));
  return r;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (Letter l : o.l_) r.push(l);
  return r;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  Word r;
  for (long i = 0; i < k; ++i) r = r * base;
  return r;
}

namespace {
int letter_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'X': return 1;
    case 'y': return 2;
    case 'Y': return 3;
    default: return -1;
  }
}
}  // namespace

Word Word::parse(const std::string& s) {
  Word w;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("word parse error at position " + std::to_string(i) + ": " + what);
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '1') {  // identity atom, matching str() of the empty word
      ++i;
      continue;
    }
    int li = letter_index(c);
    if (li < 0) fail(std::string("unexpected character '") + c + "'");
    Letter l = static_cast<Letter>(li);
    ++i;
    long exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
      }
      if (i >= s.size() || s[i] < '0' || s[i] > '9') fail("expected digits after '^'");
      long mag = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        mag = mag * 10 + (s[i] - '0');
        if (mag > 1000000) fail("exponent too large");
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    Letter eff = exp < 0 ? thinlat::inverse(l) : l;
    long k = exp < 0 ? -exp : exp;
    for (long j = 0; j < k; ++j) w.push(eff);
  }
  return w;
}

std::string Word::str() const {
  if (l_.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < l_.size()) {
    size_t j = i;
    while (j < l_.size() && l_[j] == l_[i]) ++j;
    if (!first) os << " ";
    os << letter_char(l_[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
    first = false;
  }
  return os.str();
}

bool Word::is_power_of(Letter l) const {
  for (Letter c : l_)
    if (c != l && c != thinlat::inverse(l)) return false;
  // Reduced words cannot mix l and its inverse, so this is l^k.
  return true;
}

unsigned long reduced_word_count(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  unsigned long c = 4;
  for (int i = 1; i < n; ++i) c *= 3;
  return c;
}

std::vector<Word> enumerate_ball(int radius) {
  if (radius < 0) throw std::invalid_argument("enumerate_ball: negative radius");
  std::vector<Word> out;
  out.emplace_back();
  std::vector<Word> frontier = {Word()};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    next.reserve(frontier.size() * 4);
    for (const Word& w : frontier) {
      for (int li = 0; li < 4; ++li) {
        Letter l = static_cast<Letter>(li);
        if (!w.letters().empty() && w.letters().back() == inverse(l)) continue;
        Word e = w;
        e.push(l);
        next.push_back(std::move(e));
      }
    }
    // Extensions of lex-ordered parents in letter order stay lex-ordered.
    for (const Word& w : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

namespace {
void walk_rec(Word& w, int remaining, const std::function<void(Letter)>& push,
              const std::function<void()>& pop, const std::function<void(const Word&)>& visit) {
  visit(w);
  if (remaining == 0) return;
  for (int li = 0; li < 4; ++li) {
    Letter l = static_cast<Letter>(li);
    if (!w.letters().empty() && w.letters().back() == inverse(l)) continue;
    w.push(l);  // never cancels: inverse extensions are skipped above
    push(l);
    walk_rec(w, remaining - 1, push, pop, visit);
    pop();
    w.pop_back();
  }
}
}  // namespace

void walk_ball(int radius, const std::function<void(Letter)>& push,
               const std::function<void()>& pop, const std::function<void(const Word&)>& visit) {
  Word w;
  walk_rec(w, radius, push, pop, visit);
}

}  // namespace thinlat
