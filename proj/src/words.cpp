#include "varkit/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace varkit {

Letter::Letter(std::string name_, int index_, int primes_)
    : name(std::move(name_)), index(index_), primes(primes_) {
  if (name.empty()) {
    throw std::invalid_argument("letter name must be non-empty");
  }
  for (char c : name) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument("letter name must be lowercase a-z: " +
                                  name);
    }
  }
  if (index < -1) {
    throw std::invalid_argument("letter index must be >= 0");
  }
  if (primes < 0 || primes > 2) {
    throw std::invalid_argument("letter primes must be 0, 1 or 2");
  }
}

std::string Letter::str() const {
  std::string out = name;
  if (index >= 0) {
    out += std::to_string(index);
  }
  out.append(static_cast<std::size_t>(primes), '\'');
  return out;
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + rhs.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::operator+(const Letter& rhs) const {
  std::vector<Letter> out = letters_;
  out.push_back(rhs);
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += letters_[i].str();
  }
  return out;
}

std::string Word::compact() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  for (const Letter& l : letters_) {
    out += l.str();
  }
  return out;
}

std::size_t LetterHash::operator()(const Letter& l) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (char c : l.name) {
    mix(static_cast<std::size_t>(c));
  }
  mix(static_cast<std::size_t>(l.index + 1));
  mix(static_cast<std::size_t>(l.primes));
  return h;
}

std::size_t WordHash::operator()(const Word& w) const {
  LetterHash lh;
  std::size_t h = 14695981039346656037ull;
  for (const Letter& l : w) {
    h ^= lh(l);
    h *= 1099511628211ull;
  }
  return h;
}

WordAnalysis analyze(const Word& w) {
  WordAnalysis out;
  for (const Letter& l : w) {
    ++out.occ[l];
  }
  for (const auto& [l, n] : out.occ) {
    out.content.insert(l);
    if (n == 1) {
      out.simple.insert(l);
    } else {
      out.multiple.insert(l);
    }
  }
  out.is_linear = !w.empty() && out.multiple.empty();
  return out;
}

Decomposition decompose(const Word& w) {
  std::map<Letter, std::size_t> occ;
  for (const Letter& l : w) {
    ++occ[l];
  }
  Decomposition out;
  std::vector<Letter> block;
  for (const Letter& l : w) {
    if (occ[l] == 1) {
      out.blocks.emplace_back(std::move(block));
      block.clear();
      out.simple_seq.push_back(l);
    } else {
      block.push_back(l);
    }
  }
  out.blocks.emplace_back(std::move(block));
  return out;
}

Word Decomposition::reassemble() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.insert(out.end(), blocks[i].begin(), blocks[i].end());
    if (i < simple_seq.size()) {
      out.push_back(simple_seq[i]);
    }
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Word restrict_to(const Word& w, const std::set<Letter>& x) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (x.count(l)) {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word delete_letters(const Word& w, const std::set<Letter>& x) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (!x.count(l)) {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

std::set<Word> factors(const Word& w) {
  std::set<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Letter> piece;
    for (std::size_t j = i; j < w.size(); ++j) {
      piece.push_back(w[j]);
      out.insert(Word(piece));
    }
  }
  return out;
}

std::set<Word> factors(const std::vector<Word>& ws) {
  std::set<Word> out;
  for (const Word& w : ws) {
    std::set<Word> f = factors(w);
    out.insert(f.begin(), f.end());
  }
  return out;
}

Word factor_at(const Word& w, std::size_t k, std::size_t m) {
  if (k + m > w.size()) {
    throw std::out_of_range("factor_at: k + m exceeds word length");
  }
  std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k),
                          w.begin() + static_cast<std::ptrdiff_t>(k + m));
  return Word(std::move(out));
}

std::size_t occurrence_position(const Word& w, const Letter& x,
                                std::size_t i) {
  if (i == 0) {
    throw std::out_of_range("occurrence index is 1-based");
  }
  std::size_t seen = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == x && ++seen == i) {
      return pos;
    }
  }
  throw std::out_of_range("letter " + x.str() + " has fewer than " +
                          std::to_string(i) + " occurrences");
}

bool precedes(const Word& w, const Letter& x, std::size_t i, const Letter& y,
              std::size_t j) {
  return occurrence_position(w, x, i) < occurrence_position(w, y, j);
}

const Word* Substitution::image(const Letter& l) const {
  auto it = map_.find(l);
  return it == map_.end() ? nullptr : &it->second;
}

Word Substitution::apply(const Word& w) const {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (const Word* img = image(l)) {
      out.insert(out.end(), img->begin(), img->end());
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

}  // namespace varkit
