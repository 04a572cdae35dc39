#include "artin/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/coherence.hpp"
#include "artin/equality.hpp"
#include "artin/finite_type.hpp"
#include "artin/io.hpp"
#include "artin/oracles.hpp"
#include "artin/parabolic.hpp"
#include "artin/retraction.hpp"

namespace artin {

namespace {

using json = nlohmann::ordered_json;

json set_json(const VertexSet& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(v);
  return out;
}

VertexSet parse_set(const std::string& arg, const LabeledGraph& g) {
  VertexSet out;
  std::string cur;
  std::istringstream in(arg);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return g.normalize_subset(out);
}

struct Context {
  std::string graph_file;
  bool as_json = false;
  std::ostream* out;

  LabeledGraph load_graph() const {
    if (graph_file.empty())
      throw Error(ErrorKind::BadArgument, "this command needs --graph FILE");
    std::ifstream in(graph_file);
    if (!in)
      throw Error(ErrorKind::BadArgument, "cannot open graph file " + graph_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }

  void emit(const std::string& command, const json& inputs, const json& result,
            const json& witnesses, const std::string& text) const {
    if (as_json) {
      json report;
      report["schema"] = 1;
      report["command"] = command;
      report["inputs"] = inputs;
      report["result"] = result;
      report["witnesses"] = witnesses;
      *out << report.dump(2) << "\n";
    } else {
      *out << text;
    }
  }
};

std::string describe_label_triple(const std::array<Label, 3>& ls) {
  return "(" + ls[0].str() + "," + ls[1].str() + "," + ls[2].str() + ")";
}

int cmd_classify(const Context& ctx, bool dot) {
  LabeledGraph g = ctx.load_graph();
  if (dot) {
    *ctx.out << to_dot(g);
    return 0;
  }
  bool fc = is_fc_type(g);
  bool spherical = is_spherical(g);
  bool oof = g.is_odd_odd_free();

  json components = json::array();
  std::ostringstream text;
  text << "vertices: " << g.size() << "\n";
  for (const auto& comp : g.irreducible_components()) {
    CoxeterType t = classify_irreducible(g.induced(comp));
    json c;
    c["vertices"] = set_json(comp);
    c["type"] = t.str();
    components.push_back(c);
    text << "component {";
    for (size_t i = 0; i < comp.size(); ++i) text << (i ? " " : "") << comp[i];
    text << "}: " << t.str() << "\n";
  }

  json result;
  result["fc"] = fc;
  result["spherical"] = spherical;
  result["odd_odd_free"] = oof;
  result["components"] = components;

  json witnesses = json::array();
  text << "fc: " << (fc ? "yes" : "no") << "\n";
  text << "spherical: " << (spherical ? "yes" : "no") << "\n";
  text << "odd-odd-free: " << (oof ? "yes" : "no") << "\n";
  if (fc) {
    auto report = admits_retractions_fc(g);
    result["admits_retractions"] = report.admits;
    result["admits_method"] = "fc-classification";
    for (const auto& off : report.offending) {
      json w;
      w["triangle"] = set_json(off.vertices);
      w["labels"] = describe_label_triple(off.labels);
      w["reason"] = triangle_reason_name(off.reason);
      witnesses.push_back(w);
    }
    text << "admits-retractions: " << (report.admits ? "yes" : "no") << "\n";
    for (const auto& off : report.offending)
      text << "  offending triangle " << off.vertices[0] << " " << off.vertices[1]
           << " " << off.vertices[2] << " " << describe_label_triple(off.labels)
           << " [" << triangle_reason_name(off.reason) << "]\n";
  } else if (g.size() <= 16) {
    bool admits = admits_ordinary_all(g);
    result["admits_retractions"] = admits;
    result["admits_method"] = "ordinary-exhaustive";
    text << "admits-retractions: " << (admits ? "yes" : "no") << "\n";
  } else {
    result["admits_retractions"] = nullptr;
    result["admits_method"] = "unknown";
    text << "admits-retractions: unknown (graph too large)\n";
  }

  json inputs;
  inputs["graph"] = ctx.graph_file;
  ctx.emit("classify", inputs, result, witnesses, text.str());
  return 0;
}

int cmd_retract(const Context& ctx, const std::string& set_arg,
                const std::string& word_arg) {
  LabeledGraph g = ctx.load_graph();
  VertexSet x = parse_set(set_arg, g);
  Word w = parse_word(word_arg, g);
  Word image = ordinary_map(g, x).apply(w);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["set"] = set_json(x);
  inputs["word"] = word_arg;
  json result;
  result["image"] = image.str();
  ctx.emit("retract", inputs, result, json::array(), image.str() + "\n");
  return 0;
}

int cmd_nf(const Context& ctx, int m, const std::string& word_arg) {
  LabeledGraph dihedral(Convention::FullEdge, {"a", "b"},
                        {{"a", "b", Label::finite(m)}});
  Word w = parse_word(word_arg, dihedral);
  DihedralNF nf = dihedral_nf(m, w);
  json inputs;
  inputs["m"] = m;
  inputs["word"] = word_arg;
  json result;
  result["power"] = nf.power;
  json factors = json::array();
  std::ostringstream text;
  text << "power " << nf.power << "\nfactors";
  for (const auto& f : nf.factors) {
    factors.push_back(nf.factor_word(f).str());
    text << " " << nf.factor_word(f).str();
  }
  if (nf.factors.empty()) text << " (none)";
  text << "\n";
  result["factors"] = factors;
  result["str"] = nf.str();
  ctx.emit("nf", inputs, result, json::array(), text.str());
  return 0;
}

int cmd_csets(const Context& ctx, const std::string& x_arg, const std::string& y_arg) {
  LabeledGraph g = ctx.load_graph();
  VertexSet x = parse_set(x_arg, g), y = parse_set(y_arg, g);
  OCSets oc = oc_sets(g, x, y);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["x"] = set_json(x);
  inputs["y"] = set_json(y);
  json result;
  result["o_xy"] = set_json(oc.o_xy);
  result["c_xy"] = set_json(oc.c_xy);
  result["o_yx"] = set_json(oc.o_yx);
  result["c_yx"] = set_json(oc.c_yx);
  auto fmt = [](const char* name, const VertexSet& s) {
    std::string line = std::string(name) + " = {";
    for (size_t i = 0; i < s.size(); ++i) line += (i ? " " : "") + s[i];
    return line + "}\n";
  };
  ctx.emit("csets", inputs, result, json::array(),
           fmt("O_xy", oc.o_xy) + fmt("C_xy", oc.c_xy) + fmt("O_yx", oc.o_yx) +
               fmt("C_yx", oc.c_yx));
  return 0;
}

int cmd_intersect(const Context& ctx, const std::string& x_arg,
                  const std::string& y_arg, const std::string& f_arg,
                  const std::string& g_arg) {
  LabeledGraph g = ctx.load_graph();
  VertexSet x = parse_set(x_arg, g), y = parse_set(y_arg, g);
  Word f = parse_word(f_arg, g), gw = parse_word(g_arg, g);
  IntersectionRewrite rw = intersect_rewrite(g, f, gw, x, y);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["x"] = set_json(x);
  inputs["y"] = set_json(y);
  inputs["f"] = f_arg;
  inputs["g"] = g_arg;
  json result;
  result["left"] = {{"conjugator", rw.left.conjugator.str()},
                    {"base", set_json(rw.left.base)}};
  result["right"] = {{"conjugator", rw.right.conjugator.str()},
                     {"base", set_json(rw.right.base)}};
  result["x"] = rw.x.str();
  result["y"] = rw.y.str();
  std::ostringstream text;
  auto side = [&](const char* name, const ParabolicDescriptor& p) {
    text << name << ": conjugator " << p.conjugator.str() << ", base {";
    for (size_t i = 0; i < p.base.size(); ++i) text << (i ? " " : "") << p.base[i];
    text << "}\n";
  };
  side("left", rw.left);
  side("right", rw.right);
  text << "x = " << rw.x.str() << "\ny = " << rw.y.str() << "\n";
  ctx.emit("intersect", inputs, result, json::array(), text.str());
  return 0;
}

int cmd_extend(const Context& ctx, const std::string& base_arg,
               const std::string& conj_arg, const std::string& word_arg) {
  LabeledGraph g = ctx.load_graph();
  ParabolicDescriptor p{parse_word(conj_arg, g), parse_set(base_arg, g)};
  Word w = parse_word(word_arg, g);
  Word image = extended_retraction(g, p, w);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["base"] = set_json(p.base);
  inputs["conj"] = conj_arg;
  inputs["word"] = word_arg;
  json result;
  result["image"] = image.str();
  ctx.emit("extend", inputs, result, json::array(), image.str() + "\n");
  return 0;
}

int cmd_coherence(const Context& ctx) {
  LabeledGraph g = ctx.load_graph();
  CoherenceReport general = coherence_general(g);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  json result;
  result["coherent"] = general.coherent;
  json gen;
  gen["failure"] = coherence_failure_name(general.failure);
  gen["witness"] = set_json(general.witness);
  result["general"] = gen;
  json witnesses = json::array();
  if (!general.witness.empty()) witnesses.push_back(set_json(general.witness));
  std::ostringstream text;
  text << "coherent: " << (general.coherent ? "yes" : "no") << "\n";
  if (!general.coherent) {
    text << "failure: " << coherence_failure_name(general.failure) << "\n";
    if (!general.witness.empty()) {
      text << "witness:";
      for (const auto& v : general.witness) text << " " << v;
      text << "\n";
    }
  }
  bool fc_applicable = is_fc_type(g) && admits_retractions_fc(g).admits;
  if (fc_applicable) {
    json fcj;
    fcj["chordal"] = g.is_chordal();
    fcj["chordal_le2"] = g.restrict_le2().is_chordal();
    result["fc"] = fcj;
    text << "chordal: " << (g.is_chordal() ? "yes" : "no") << "\n";
    text << "chordal-le2: " << (g.restrict_le2().is_chordal() ? "yes" : "no") << "\n";
  } else {
    result["fc"] = nullptr;
  }
  ctx.emit("coherence", inputs, result, witnesses, text.str());
  return general.coherent ? 0 : 1;
}

int cmd_verify(const Context& ctx, const std::string& set_arg) {
  LabeledGraph g = ctx.load_graph();
  VertexSet x = parse_set(set_arg, g);
  GeneratorMap m = ordinary_map(g, x);
  VerifyResult res = verify_retraction(g, x, m);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["set"] = set_json(x);
  json result;
  result["ok"] = res.ok;
  json witnesses = json::array();
  std::ostringstream text;
  text << (res.ok ? "retraction verified" : "relation violated") << "\n";
  if (res.violated_edge) {
    result["violated_edge"] = {res.violated_edge->first, res.violated_edge->second};
    witnesses.push_back(json::array({res.violated_edge->first,
                                     res.violated_edge->second}));
    text << "edge: " << res.violated_edge->first << " " << res.violated_edge->second
         << "\n";
  }
  ctx.emit("verify", inputs, result, witnesses, text.str());
  return res.ok ? 0 : 1;
}

int cmd_search_f2(const Context& ctx, int r, int s, int len) {
  SearchOutcome outcome = s >= 0 ? f2_system_search(r, s, len)
                                 : f2_single_search(r, len);
  json inputs;
  inputs["r"] = r;
  if (s >= 0) inputs["s"] = s;
  inputs["len"] = len;
  json result;
  result["found"] = outcome.found ? json(outcome.found->str()) : json(nullptr);
  result["searched"] = outcome.searched_count;
  result["bound"] = outcome.bound;
  std::ostringstream text;
  if (outcome.found) text << "solution: " << outcome.found->str() << "\n";
  else text << "no solution\n";
  text << "searched " << outcome.searched_count << " words up to length "
       << outcome.bound << "\n";
  ctx.emit("search-f2", inputs, result, json::array(), text.str());
  return outcome.found ? 1 : 0;
}

int cmd_search_234(const Context& ctx, int len) {
  Triangle234Outcome res = triangle_234_search(len);
  json inputs;
  inputs["len"] = len;
  json result;
  result["found"] =
      res.outcome.found ? json(res.outcome.found->str()) : json(nullptr);
  result["searched"] = res.outcome.searched_count;
  result["commuting"] = res.commuting_count;
  result["parity_ok"] = res.parity_ok;
  std::ostringstream text;
  if (res.outcome.found) text << "solution: " << res.outcome.found->str() << "\n";
  else text << "no solution\n";
  text << "searched " << res.outcome.searched_count << " normal forms, "
       << res.commuting_count << " commute with a\n";
  text << "b-parity obstruction: " << (res.parity_ok ? "holds" : "violated") << "\n";
  ctx.emit("search-234", inputs, result, json::array(), text.str());
  return res.outcome.found || !res.parity_ok ? 1 : 0;
}

int cmd_ribbons(const Context& ctx, const std::string& x, const std::string& y) {
  LabeledGraph g = ctx.load_graph();
  Word w = elementary_ribbon(g, x, y);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["x"] = x;
  inputs["y"] = y;
  json result;
  result["ribbon"] = w.str();
  ctx.emit("ribbons", inputs, result, json::array(), w.str() + "\n");
  return 0;
}

int cmd_xperp(const Context& ctx, const std::string& set_arg) {
  LabeledGraph g = ctx.load_graph();
  VertexSet x = parse_set(set_arg, g);
  VertexSet perp = x_perp(g, x);
  json inputs;
  inputs["graph"] = ctx.graph_file;
  inputs["set"] = set_json(x);
  json result;
  result["perp"] = set_json(perp);
  std::string text = "{";
  for (size_t i = 0; i < perp.size(); ++i) text += (i ? " " : "") + perp[i];
  text += "}\n";
  ctx.emit("xperp", inputs, result, json::array(), text);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"computations in Artin groups with retractions"};
  app.name("artin");

  Context ctx;
  ctx.out = &out;
  app.add_option("--graph", ctx.graph_file, "graph description file");
  app.add_flag("--json", ctx.as_json, "machine-readable report");
  app.require_subcommand(1);

  bool dot = false;
  auto* classify = app.add_subcommand("classify", "graph-level classification");
  classify->add_flag("--dot", dot, "emit the graph in DOT format");

  std::string set_arg, word_arg, x_arg, y_arg, f_arg, g_arg, base_arg, conj_arg;
  int m = 2, r = 1, s = -1, len = 4;

  auto* retract = app.add_subcommand("retract", "apply an ordinary retraction");
  retract->add_option("--set", set_arg, "target generators")->required();
  retract->add_option("--word", word_arg, "word to retract")->required();

  auto* nf = app.add_subcommand("nf", "dihedral Garside normal form");
  nf->add_option("--m", m, "dihedral label")->required();
  nf->add_option("--word", word_arg, "word over a,b")->required();

  auto* csets = app.add_subcommand("csets", "O- and C-sets of a subset pair");
  csets->add_option("--x", x_arg)->required();
  csets->add_option("--y", y_arg)->required();

  auto* intersect = app.add_subcommand("intersect", "rewrite a parabolic intersection");
  intersect->add_option("--x", x_arg)->required();
  intersect->add_option("--y", y_arg)->required();
  intersect->add_option("--f", f_arg)->required();
  intersect->add_option("--g", g_arg)->required();

  auto* extend = app.add_subcommand("extend", "retraction to a parabolic subgroup");
  extend->add_option("--base", base_arg)->required();
  extend->add_option("--conj", conj_arg)->required();
  extend->add_option("--word", word_arg)->required();

  app.add_subcommand("coherence", "decide coherence");

  auto* verify = app.add_subcommand("verify", "verify the ordinary retraction");
  verify->add_option("--set", set_arg)->required();

  auto* searchf2 = app.add_subcommand("search-f2", "free-group system search");
  searchf2->add_option("--r", r)->required();
  searchf2->add_option("--s", s);
  searchf2->add_option("--len", len)->required();

  auto* search234 = app.add_subcommand("search-234", "(2,3,4) retraction search");
  search234->add_option("--len", len)->required();

  auto* ribbons = app.add_subcommand("ribbons", "elementary ribbon word");
  ribbons->add_option("--x", x_arg)->required();
  ribbons->add_option("--y", y_arg)->required();

  auto* xperp = app.add_subcommand("xperp", "commuting complement of a subset");
  xperp->add_option("--set", set_arg)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(ctx, dot);
    if (app.got_subcommand(retract)) return cmd_retract(ctx, set_arg, word_arg);
    if (app.got_subcommand(nf)) return cmd_nf(ctx, m, word_arg);
    if (app.got_subcommand(csets)) return cmd_csets(ctx, x_arg, y_arg);
    if (app.got_subcommand(intersect))
      return cmd_intersect(ctx, x_arg, y_arg, f_arg, g_arg);
    if (app.got_subcommand(extend)) return cmd_extend(ctx, base_arg, conj_arg, word_arg);
    if (app.got_subcommand("coherence")) return cmd_coherence(ctx);
    if (app.got_subcommand(verify)) return cmd_verify(ctx, set_arg);
    if (app.got_subcommand(searchf2)) return cmd_search_f2(ctx, r, s, len);
    if (app.got_subcommand(search234)) return cmd_search_234(ctx, len);
    if (app.got_subcommand(ribbons)) return cmd_ribbons(ctx, x_arg, y_arg);
    if (app.got_subcommand(xperp)) return cmd_xperp(ctx, set_arg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace artin
