#ifndef ARTIN_IO_HPP
#define ARTIN_IO_HPP

#include <string>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// Line-oriented graph format:
//   convention no-inf|no-2|full
//   vertex <name>
//   edge <u> <v> <label>      label: integer >= 2 or `inf`
// `#` starts a comment, blank lines are skipped.
LabeledGraph parse_graph(const std::string& text);

// `1` is the identity; otherwise terms split on whitespace or `*`,
// each `name` or `name^<signed integer>`.
Word parse_word(const std::string& text, const LabeledGraph& g);

// prints in the graph's declared convention; parsing the output again
// reproduces the graph
std::string print_graph(const LabeledGraph& g);

std::string print_word(const Word& w);

std::string to_dot(const LabeledGraph& g);

}  // namespace artin

#endif
