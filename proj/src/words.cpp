#include "artin/words.hpp"

#include <algorithm>

namespace artin {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long e = static_cast<long long>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += letters_[i].gen;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word reduce_free(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word alternating(const std::string& x, const std::string& y, int count, Side side) {
  if (count < 0) throw Error(ErrorKind::BadArgument, "negative alternating length");
  std::vector<Letter> out;
  out.reserve(count);
  if (side == Side::Left) {
    for (int i = 0; i < count; ++i) out.push_back({i % 2 == 0 ? x : y, 1});
  } else {
    // parity counted from the end: ...yxy finishes with y
    for (int i = 0; i < count; ++i)
      out.push_back({(count - 1 - i) % 2 == 0 ? y : x, 1});
  }
  return Word(std::move(out));
}

GeneratorMap::GeneratorMap(LabeledGraph graph, VertexSet target,
                           std::map<std::string, std::optional<std::string>> images)
    : graph_(std::move(graph)), target_(), images_(std::move(images)) {
  target_ = graph_.normalize_subset(target);
  for (const auto& v : graph_.vertices()) {
    auto it = images_.find(v);
    if (it == images_.end())
      throw Error(ErrorKind::BadArgument, "generator map misses image of " + v);
    if (it->second &&
        !std::binary_search(target_.begin(), target_.end(), *it->second))
      throw Error(ErrorKind::BadArgument,
                  "image of " + v + " lies outside the target set");
  }
  for (const auto& x : target_) {
    auto it = images_.find(x);
    if (!it->second || *it->second != x)
      throw Error(ErrorKind::BadArgument, "map does not fix target generator " + x);
  }
  if (images_.size() != graph_.vertices().size())
    throw Error(ErrorKind::UnknownGenerator, "generator map over unknown generators");
}

const std::optional<std::string>& GeneratorMap::image(const std::string& gen) const {
  auto it = images_.find(gen);
  if (it == images_.end())
    throw Error(ErrorKind::UnknownGenerator, "unknown generator " + gen);
  return it->second;
}

Word GeneratorMap::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    const auto& img = image(l.gen);
    if (img) out.push_back({*img, l.sign});
  }
  return reduce_free(Word(std::move(out)));
}

}  // namespace artin
