#include "artin/io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace artin {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Label parse_label(const std::string& tok, int line_no) {
  if (tok == "inf") return Label::infinity();
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad label '" + tok + "'", line_no);
  }
  if (pos != tok.size()) throw ParseError("bad label '" + tok + "'", line_no);
  if (v < 2)
    throw Error(ErrorKind::BadLabel,
                "label must be >= 2 at line " + std::to_string(line_no));
  return Label::finite(v);
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<Convention> convention;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<std::string, std::string>> seen_pairs;

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "convention") {
      if (toks.size() != 2) throw ParseError("convention expects one argument", line_no);
      if (convention) throw ParseError("duplicate convention line", line_no);
      if (toks[1] == "no-inf") convention = Convention::NoInfinityEdge;
      else if (toks[1] == "no-2") convention = Convention::NoTwoEdge;
      else if (toks[1] == "full") convention = Convention::FullEdge;
      else throw ParseError("unknown convention '" + toks[1] + "'", line_no);
    } else if (head == "vertex") {
      if (toks.size() != 2) throw ParseError("vertex expects one name", line_no);
      if (std::find(vertices.begin(), vertices.end(), toks[1]) != vertices.end())
        throw ParseError("duplicate vertex '" + toks[1] + "'", line_no);
      vertices.push_back(toks[1]);
    } else if (head == "edge") {
      if (toks.size() != 4) throw ParseError("edge expects two names and a label", line_no);
      if (!convention) throw ParseError("edge before the convention line", line_no);
      const std::string &u = toks[1], &v = toks[2];
      if (u == v) throw ParseError("self-paired edge '" + u + "'", line_no);
      for (const auto& name : {u, v})
        if (std::find(vertices.begin(), vertices.end(), name) == vertices.end())
          throw Error(ErrorKind::UnknownVertex,
                      "undeclared vertex '" + name + "' at line " +
                          std::to_string(line_no));
      auto key = std::minmax(u, v);
      if (std::find(seen_pairs.begin(), seen_pairs.end(),
                    std::make_pair(key.first, key.second)) != seen_pairs.end())
        throw Error(ErrorKind::DuplicateEdge,
                    "duplicate edge " + u + " " + v + " at line " +
                        std::to_string(line_no));
      seen_pairs.emplace_back(key.first, key.second);
      edges.push_back({u, v, parse_label(toks[3], line_no)});
    } else {
      throw ParseError("unknown directive '" + head + "'", line_no);
    }
  }
  if (!convention) throw ParseError("missing convention line", line_no ? line_no : 1);
  return LabeledGraph(*convention, std::move(vertices), edges);
}

Word parse_word(const std::string& text, const LabeledGraph& g) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  auto toks = split_ws(normalized);
  if (toks.size() == 1 && toks[0] == "1") return Word();
  std::vector<Letter> letters;
  for (const auto& tok : toks) {
    if (tok == "1") throw ParseError("identity terms cannot be mixed with letters", 1);
    std::string name = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      size_t pos = 0;
      try {
        exp = std::stoll(e, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad exponent '" + e + "'", 1);
      }
      if (pos != e.size()) throw ParseError("bad exponent '" + e + "'", 1);
    }
    if (name.empty()) throw ParseError("empty generator name", 1);
    if (!g.has_vertex(name))
      throw Error(ErrorKind::UnknownGenerator, "unknown generator " + name);
    int sign = exp >= 0 ? 1 : -1;
    for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i)
      letters.push_back({name, sign});
  }
  return Word(std::move(letters));
}

std::string print_graph(const LabeledGraph& g) {
  std::ostringstream out;
  Convention conv = g.declared_convention();
  out << "convention " << convention_name(conv) << "\n";
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  const auto& names = g.vertices();
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) {
      Label l = g.label(names[i], names[j]);
      if (conv == Convention::NoInfinityEdge && l.is_infinite()) continue;
      if (conv == Convention::NoTwoEdge && l == Label::finite(2)) continue;
      out << "edge " << names[i] << " " << names[j] << " " << l.str() << "\n";
    }
  return out.str();
}

std::string print_word(const Word& w) { return w.str(); }

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph coxeter {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  const auto& names = g.vertices();
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) {
      Label l = g.label(names[i], names[j]);
      if (l.is_infinite()) continue;  // no-infinity-edge drawing
      out << "  \"" << names[i] << "\" -- \"" << names[j] << "\" [label=\""
          << l.str() << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace artin
