#ifndef ARTIN_WORDS_HPP
#define ARTIN_WORDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
  bool operator<(const Letter& o) const {
    return gen != o.gen ? gen < o.gen : sign > o.sign;  // x before x^-1
  }
};

// A word in the free monoid over signed generators; the empty word is the
// identity. Nothing here depends on an ambient graph.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word generator(const std::string& name, int sign = 1) {
    return Word({{name, sign}});
  }

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push(const Letter& l) { letters_.push_back(l); }
  Word inverse() const;
  std::string str() const;  // "1" for the identity, powers collapsed

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  bool operator<(const Word& o) const { return letters_ < o.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

Word reduce_free(const Word& w);

enum class Side { Left, Right };

// Left: xyx... with `count` factors starting at x.
// Right: ...yxy with `count` factors ending at y.
Word alternating(const std::string& x, const std::string& y, int count, Side side);

// Total map generators -> (generator in target | identity), fixing the target
// pointwise. Applying it to a word drops identity letters, keeps signs, and
// freely reduces.
class GeneratorMap {
 public:
  GeneratorMap(LabeledGraph graph, VertexSet target,
               std::map<std::string, std::optional<std::string>> images);

  const LabeledGraph& graph() const { return graph_; }
  const VertexSet& target() const { return target_; }
  const std::optional<std::string>& image(const std::string& gen) const;
  Word apply(const Word& w) const;

 private:
  LabeledGraph graph_;
  VertexSet target_;
  std::map<std::string, std::optional<std::string>> images_;
};

}  // namespace artin

#endif
