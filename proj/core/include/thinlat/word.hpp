#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace thinlat {

/// Letters of the free group F(x, y); capitals are inverses.
/// The numeric order x < X < y < Y is the global shortlex letter order.
enum class Letter : uint8_t { x = 0, X = 1, y = 2, Y = 3 };

inline Letter inverse(Letter l) { return static_cast<Letter>(static_cast<uint8_t>(l) ^ 1); }
inline char letter_char(Letter l) { return "xXyY"[static_cast<uint8_t>(l)]; }

/// Freely reduced word in F(x, y). The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Parses whitespace-separated letters with optional ^k / ^-k exponents,
  /// e.g. "x y^-1 x", "x^2 Y^3", "xyX". Throws std::invalid_argument with
  /// the offending position on malformed input.
  static Word parse(const std::string& s);

  const std::vector<Letter>& letters() const { return l_; }
  size_t length() const { return l_.size(); }
  bool is_identity() const { return l_.empty(); }

  /// Appends a letter with free reduction.
  void push(Letter l);
  /// Drops the last letter (a reduced word stays reduced).
  void pop_back();

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation + reduction
  Word pow(long e) const;

  friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Shortlex: length first, then lexicographic in the letter order.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.l_.size() != b.l_.size()) return a.l_.size() < b.l_.size();
    return a.l_ < b.l_;
  }

  /// Run-length printed form ("x*y^-1" style is not used; output is like
  /// "x y^-1 x" with exponents folded: "x^2 Y^3"). parse(str()) == *this.
  std::string str() const;

  /// True when the word is v^k for a single letter v (including k = 0).
  bool is_power_of(Letter l) const;

 private:
  std::vector<Letter> l_;
};

inline Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

/// All freely reduced words of length <= radius in shortlex order, each once.
std::vector<Word> enumerate_ball(int radius);

/// Number of freely reduced words of length exactly n: 1, 4, 4*3, 4*3^2, ...
unsigned long reduced_word_count(int n);

/// Depth-first walk over the reduced ball of given radius with a
/// caller-managed state stack: `push(letter)` is called entering a letter
/// (prefix grows), `pop()` leaving it, and `visit(word)` at every node
/// (identity included). Prefix sharing makes per-word evaluation O(1)
/// matrix products.
void walk_ball(int radius, const std::function<void(Letter)>& push,
               const std::function<void()>& pop, const std::function<void(const Word&)>& visit);

}  // namespace thinlat
