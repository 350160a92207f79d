#ifndef VARKIT_WORDS_HPP_
#define VARKIT_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace varkit {

// A letter is a lowercase name plus an optional numeric index and up to two
// primes, so indexed families like z3'' are first-class values.  Digits and
// apostrophes are not allowed in the name itself.
struct Letter {
  std::string name;
  int index = -1;  // -1 means no index
  int primes = 0;  // 0, 1 or 2

  Letter() = default;
  Letter(std::string name, int index = -1, int primes = 0);

  std::string str() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Immutable finite sequence of letters.  The empty word acts as the monoid
// identity and prints as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word single(Letter l) { return Word({std::move(l)}); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word operator+(const Word& rhs) const;
  Word operator+(const Letter& rhs) const;

  // Space-separated letter tokens; "1" for the empty word.
  std::string str() const;
  // Tokens concatenated without separators, for element labels.
  std::string compact() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct LetterHash {
  std::size_t operator()(const Letter& l) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

struct WordAnalysis {
  std::set<Letter> content;
  std::map<Letter, std::size_t> occ;
  std::set<Letter> simple;
  std::set<Letter> multiple;
  bool is_linear = false;  // all occurrences <= 1 and the word is non-empty
};

WordAnalysis analyze(const Word& w);

// Alternating representation w = blocks[0] s[0] blocks[1] ... s[m-1] blocks[m]
// where s is the sequence of letters occurring exactly once in w and no block
// contains such a letter.
struct Decomposition {
  std::vector<Letter> simple_seq;
  std::vector<Word> blocks;  // always simple_seq.size() + 1 entries

  Word reassemble() const;
};

Decomposition decompose(const Word& w);

Word reverse(const Word& w);

// Keeps exactly the letters in x, order preserved.
Word restrict_to(const Word& w, const std::set<Letter>& x);
// Removes every occurrence of a letter in x.
Word delete_letters(const Word& w, const std::set<Letter>& x);

// All non-empty contiguous factors, deduplicated by word equality.
std::set<Word> factors(const Word& w);
std::set<Word> factors(const std::vector<Word>& ws);

// The factor of length m directly succeeding the prefix of length k.
// Throws std::out_of_range unless k + m <= w.size().
Word factor_at(const Word& w, std::size_t k, std::size_t m);

// 0-based position of the i-th occurrence (i >= 1) of x in w.
// Throws std::out_of_range if x occurs fewer than i times.
std::size_t occurrence_position(const Word& w, const Letter& x, std::size_t i);

bool precedes(const Word& w, const Letter& x, std::size_t i, const Letter& y,
              std::size_t j);

// Finite letter-to-word map extended homomorphically; unmapped letters are
// kept verbatim.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Letter, Word> mapping)
      : map_(std::move(mapping)) {}

  void set(const Letter& l, Word image) { map_[l] = std::move(image); }
  const Word* image(const Letter& l) const;
  const std::map<Letter, Word>& mapping() const { return map_; }

  Word apply(const Word& w) const;

  friend auto operator<=>(const Substitution&, const Substitution&) = default;

 private:
  std::map<Letter, Word> map_;
};

}  // namespace varkit

#endif  // VARKIT_WORDS_HPP_
