#include "coxrh/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coxrh/classify.hpp"
#include "coxrh/relhyp.hpp"

namespace coxrh {

using ordered_json = nlohmann::ordered_json;

const SimpleGraph& InputDocument::require_graph() const {
  if (!graph)
    throw Error(ErrorCode::ValidationError,
                "this command needs a graph-form input");
  return *graph;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_int(const std::string& s, const std::string& what) {
  if (!all_digits(s))
    throw Error(ErrorCode::ParseError, what + ": expected an integer, got '" + s + "'");
  return std::stoi(s);
}

std::optional<InputDocument> parse_named_family(const std::string& token) {
  auto matrix_doc = [](CoxeterMatrix m) {
    InputDocument doc;
    doc.matrix = std::move(m);
    return doc;
  };

  auto colon = token.find(':');
  if (colon != std::string::npos) {
    std::string head = token.substr(0, colon);
    std::string tail = token.substr(colon + 1);
    if (head == "chain4") return matrix_doc(chain4(parse_int(tail, token)));
    if (head == "racg-cycle") {
      InputDocument doc;
      doc.graph = SimpleGraph::cycle(parse_int(tail, token));
      doc.matrix = from_graph(*doc.graph);
      return doc;
    }
    if (head == "I2") return matrix_doc(catalog::I2(parse_int(tail, token)));
    if (head == "At") return matrix_doc(catalog::tilde_A(parse_int(tail, token)));
    if (head == "Bt") return matrix_doc(catalog::tilde_B(parse_int(tail, token)));
    if (head == "Ct") return matrix_doc(catalog::tilde_C(parse_int(tail, token)));
    if (head == "Dt") return matrix_doc(catalog::tilde_D(parse_int(tail, token)));
    return std::nullopt;
  }

  if (token == "At1") return matrix_doc(catalog::tilde_A(1));
  if (token == "Et6" || token == "Et7" || token == "Et8")
    return matrix_doc(catalog::tilde_E(token[2] - '0'));
  if (token == "Ft4") return matrix_doc(catalog::tilde_F4());
  if (token == "Gt2") return matrix_doc(catalog::tilde_G2());
  if (token == "F4") return matrix_doc(catalog::F4());
  if (token == "H3") return matrix_doc(catalog::H(3));
  if (token == "H4") return matrix_doc(catalog::H(4));

  if (token.size() >= 2 && all_digits(token.substr(1))) {
    int n = parse_int(token.substr(1), token);
    switch (token[0]) {
      case 'A': return matrix_doc(catalog::A(n));
      case 'B': return matrix_doc(catalog::B(n));
      case 'D': return matrix_doc(catalog::D(n));
      case 'E': return matrix_doc(catalog::E(n));
      default: break;
    }
  }
  return std::nullopt;
}

int parse_label_token(const std::string& tok, int line_no) {
  if (tok == "inf" || tok == "Inf" || tok == "INF") return kInfinity;
  if (!all_digits(tok))
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": bad order '" + tok + "'");
  int v = std::stoi(tok);
  return v == 0 ? kInfinity : v;
}

InputDocument parse_txt(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<int>> entries;

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    if (n < 0) {
      std::string tok;
      ls >> tok;
      if (!all_digits(tok))
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) +
                        ": expected the generator count, got '" + tok + "'");
      n = std::stoi(tok);
      if (n > CoxeterMatrix::kMaxRank)
        throw Error(ErrorCode::TooLarge,
                    "rank " + std::to_string(n) + " exceeds the cap");
      entries.assign(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) entries[i][i] = 1;
      continue;
    }
    std::string si, sj, sm;
    if (!(ls >> si >> sj >> sm))
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'i j m'");
    int i = parse_int(si, "line " + std::to_string(line_no)) - 1;
    int j = parse_int(sj, "line " + std::to_string(line_no)) - 1;
    int m = parse_label_token(sm, line_no);
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": bad generator pair");
    entries[i][j] = entries[j][i] = m;
  }
  if (n < 0)
    throw Error(ErrorCode::ParseError, "empty TXT input");

  InputDocument doc;
  doc.matrix = CoxeterMatrix(n, entries);
  return doc;
}

int json_label(const nlohmann::json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf") return kInfinity;
    throw Error(ErrorCode::ParseError, "bad matrix entry '" + s + "'");
  }
  if (!v.is_number_integer())
    throw Error(ErrorCode::ParseError, "matrix entries must be integers or \"inf\"");
  int m = v.get<int>();
  return m == 0 ? kInfinity : m;
}

InputDocument parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object())
    throw Error(ErrorCode::ParseError, "top-level JSON value must be an object");

  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    if (!rows.is_array())
      throw Error(ErrorCode::ParseError, "\"matrix\" must be an array of rows");
    int n = static_cast<int>(rows.size());
    std::vector<std::vector<int>> entries;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw Error(ErrorCode::ParseError, "matrix is not square");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(json_label(v));
      entries.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
      if (static_cast<int>(names.size()) != n)
        throw Error(ErrorCode::ParseError,
                    "generator list length differs from the matrix size");
    }
    InputDocument doc;
    doc.matrix = CoxeterMatrix(n, entries, std::move(names));
    return doc;
  }

  if (j.contains("vertices")) {
    std::vector<std::string> names;
    int n;
    const auto& verts = j.at("vertices");
    if (verts.is_number_integer()) {
      n = verts.get<int>();
    } else {
      for (const auto& v : verts) names.push_back(v.get<std::string>());
      n = static_cast<int>(names.size());
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorCode::ParseError, "edges must be 2-element arrays");
      auto endpoint = [&](const nlohmann::json& v) -> int {
        if (v.is_number_integer()) return v.get<int>() - 1;
        auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end())
          throw Error(ErrorCode::ParseError,
                      "unknown vertex '" + v.get<std::string>() + "'");
        return static_cast<int>(it - names.begin());
      };
      edges.emplace_back(endpoint(e[0]), endpoint(e[1]));
    }
    InputDocument doc;
    doc.graph = SimpleGraph(n, std::move(edges), std::move(names));
    doc.matrix = from_graph(*doc.graph);
    return doc;
  }

  throw Error(ErrorCode::ParseError,
              "JSON input needs either \"matrix\" or \"vertices\"");
}

}  // namespace

InputDocument parse_input(const std::string& text, InputFormat format) {
  std::string t = trim(text);
  if (format == InputFormat::Json) return parse_json(t);
  if (format == InputFormat::Txt) return parse_txt(t);

  if (!t.empty() && t[0] == '{') return parse_json(t);
  if (t.find_first_of(" \t\n") == std::string::npos) {
    if (auto doc = parse_named_family(t)) return *doc;
    if (!all_digits(t))
      throw Error(ErrorCode::ParseError, "unknown named family '" + t + "'");
  }
  return parse_txt(t);
}

std::string to_txt(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << m.rank() << "\n";
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m.order(i, j) != 2)
        out << (i + 1) << " " << (j + 1) << " " << m.order(i, j) << "\n";
  return out.str();
}

CommandOptions parse_options_json(const std::string& options_json) {
  CommandOptions opts;
  if (trim(options_json).empty()) return opts;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("options: ") + e.what());
  }
  opts.json = j.value("json", false);
  if (j.contains("subset"))
    opts.subset = j.at("subset").get<std::vector<std::string>>();
  if (j.contains("types"))
    opts.types = j.at("types").get<std::vector<std::vector<std::string>>>();
  if (j.contains("s0")) opts.s0 = j.at("s0").get<std::string>();
  opts.min_pairs = j.value("min_pairs", 2);
  opts.tol = j.value("tol", 1e-9);
  return opts;
}

namespace {

int resolve_generator(const CoxeterMatrix& m, const std::string& token) {
  for (int i = 0; i < m.rank(); ++i)
    if (m.name(i) == token) return i;
  if (all_digits(token)) {
    int idx = std::stoi(token) - 1;
    if (idx >= 0 && idx < m.rank()) return idx;
  }
  throw Error(ErrorCode::ValidationError, "unknown generator '" + token + "'");
}

GenSet resolve_subset(const CoxeterMatrix& m, const std::vector<std::string>& tokens) {
  GenSet out;
  for (const auto& t : tokens) out.add(resolve_generator(m, t));
  return out;
}

ordered_json subset_json(const CoxeterMatrix& m, GenSet j) {
  ordered_json out = ordered_json::array();
  for (int s : j) out.push_back(m.name(s));
  return out;
}

std::string subset_text(const CoxeterMatrix& m, GenSet j) {
  std::string out = "{";
  bool first = true;
  for (int s : j) {
    if (!first) out += ",";
    out += m.name(s);
    first = false;
  }
  return out + "}";
}

ordered_json family_json(const CoxeterMatrix& m, const std::vector<GenSet>& classes) {
  ordered_json out = ordered_json::array();
  for (GenSet k : classes) out.push_back(subset_json(m, k));
  return out;
}

std::string family_text(const CoxeterMatrix& m, const std::vector<GenSet>& classes) {
  std::string out;
  for (GenSet k : classes) {
    if (!out.empty()) out += ", ";
    out += subset_text(m, k);
  }
  return out.empty() ? "(empty)" : out;
}

ordered_json verify_json(const CoxeterMatrix& m, const VerifyReport& r) {
  ordered_json out;
  out["rh1"] = r.rh1;
  out["rh2"] = r.rh2;
  ordered_json cores = ordered_json::array();
  for (const auto& entry : r.coverage) {
    ordered_json c;
    c["members"] = subset_json(m, entry.core.members);
    c["kind"] = entry.core.kind == Core::Kind::Affine ? "affine" : "pair";
    if (entry.covering_class)
      c["covered_by"] = subset_json(m, *entry.covering_class);
    else
      c["covered_by"] = nullptr;
    cores.push_back(std::move(c));
  }
  out["cores"] = std::move(cores);
  if (r.rh2_violation) {
    ordered_json v;
    v["class1"] = subset_json(m, r.rh2_violation->class1);
    v["class2"] = subset_json(m, r.rh2_violation->class2);
    v["intersection"] = subset_json(m, r.rh2_violation->intersection);
    out["rh2_violation"] = std::move(v);
  } else {
    out["rh2_violation"] = nullptr;
  }
  return out;
}

std::string verify_text(const CoxeterMatrix& m, const VerifyReport& r) {
  std::string out;
  if (r.rh1) {
    out += "RH1: pass\n";
  } else {
    out += "RH1: fail";
    for (const auto& entry : r.coverage)
      if (!entry.covering_class) {
        out += " (uncovered core " + subset_text(m, entry.core.members) + ")";
        break;
      }
    out += "\n";
  }
  if (r.rh2) {
    out += "RH2: pass\n";
  } else {
    out += "RH2: fail (" + subset_text(m, r.rh2_violation->class1) + " ∩ " +
           subset_text(m, r.rh2_violation->class2) + " = " +
           subset_text(m, r.rh2_violation->intersection) + " is not spherical)\n";
  }
  return out;
}

ordered_json header(const std::string& command, const CoxeterMatrix& m) {
  ordered_json out;
  out["command"] = command;
  out["generators"] = ordered_json(m.names());
  return out;
}

CommandResult cmd_classify(const CoxeterMatrix& m, const CommandOptions& opts) {
  GenSet j = opts.subset ? resolve_subset(m, *opts.subset) : m.all();
  SubsetClass c = classify_subset(m, j);

  ordered_json out = header("classify", m);
  out["subset"] = subset_json(m, j);
  out["spherical"] = c.spherical;
  out["irreducible"] = c.irreducible;
  out["irreducible_affine"] = c.irreducible_affine;
  out["affine"] = c.affine;
  out["euclidean"] = c.euclidean;
  out["minimal_hyperbolic"] = c.minimal_hyperbolic;
  ordered_json comps = ordered_json::array();
  for (const auto& [comp, name] : c.matched_components) {
    ordered_json e;
    e["members"] = subset_json(m, comp);
    e["type"] = name;
    comps.push_back(std::move(e));
  }
  out["components"] = std::move(comps);

  std::ostringstream text;
  text << "subset " << subset_text(m, j) << "\n"
       << "  spherical:           " << (c.spherical ? "yes" : "no") << "\n"
       << "  irreducible:         " << (c.irreducible ? "yes" : "no") << "\n"
       << "  irreducible affine:  " << (c.irreducible_affine ? "yes" : "no") << "\n"
       << "  affine:              " << (c.affine ? "yes" : "no") << "\n"
       << "  Euclidean:           " << (c.euclidean ? "yes" : "no") << "\n"
       << "  minimal hyperbolic:  " << (c.minimal_hyperbolic ? "yes" : "no") << "\n";
  for (const auto& [comp, name] : c.matched_components)
    text << "  component " << subset_text(m, comp) << ": " << name << "\n";
  return {text.str(), std::move(out)};
}

CommandResult cmd_perp(const CoxeterMatrix& m, const CommandOptions& opts) {
  if (!opts.subset)
    throw Error(ErrorCode::ValidationError, "perp needs --subset");
  GenSet j = resolve_subset(m, *opts.subset);
  GenSet p = m.perp(j);
  ordered_json out = header("perp", m);
  out["subset"] = subset_json(m, j);
  out["perp"] = subset_json(m, p);
  return {"perp of " + subset_text(m, j) + " = " + subset_text(m, p) + "\n",
          std::move(out)};
}

CommandResult cmd_moussong(const CoxeterMatrix& m) {
  bool hyp = moussong_hyperbolic(m);
  ordered_json out = header("moussong", m);
  out["hyperbolic"] = hyp;
  return {std::string("hyperbolic: ") + (hyp ? "true" : "false") + "\n",
          std::move(out)};
}

CommandResult cmd_verify(const CoxeterMatrix& m, const CommandOptions& opts) {
  if (!opts.types)
    throw Error(ErrorCode::ValidationError, "relhyp-verify needs --types");
  std::vector<GenSet> classes;
  for (const auto& names : *opts.types)
    classes.push_back(resolve_subset(m, names));
  VerifyReport r = verify_family(m, classes);
  ordered_json out = header("relhyp-verify", m);
  out["types"] = family_json(m, classes);
  ordered_json v = verify_json(m, r);
  out.update(v);
  return {verify_text(m, r), std::move(out)};
}

CommandResult cmd_minimal(const CoxeterMatrix& m) {
  PeripheralFamily fam = minimal_family(m);
  ordered_json out = header("relhyp-minimal", m);
  out["classes"] = family_json(m, fam.classes);
  out["verification"] = verify_json(m, *fam.verification);
  return {"minimal family: " + family_text(m, fam.classes) + "\n" +
              verify_text(m, *fam.verification),
          std::move(out)};
}

CommandResult cmd_decide(const CoxeterMatrix& m) {
  Decision d = decide(m);
  ordered_json out = header("decide", m);
  out["status"] = to_string(d.status);
  out["classes"] = family_json(m, d.minimal_family.classes);
  out["details"] = d.details;
  return {"status: " + to_string(d.status) + "\nclasses: " +
              family_text(m, d.minimal_family.classes) + "\n",
          std::move(out)};
}

CommandResult cmd_maxparab(const CoxeterMatrix& m, const CommandOptions& opts) {
  if (!opts.s0)
    throw Error(ErrorCode::ValidationError, "maxparab needs --s0");
  int s0 = resolve_generator(m, *opts.s0);
  ordered_json out = header("maxparab", m);
  out["s0"] = m.name(s0);
  try {
    PeripheralFamily fam = maxparab(m, s0);
    out["hypothesis_holds"] = true;
    out["classes"] = family_json(m, fam.classes);
    out["verification"] = verify_json(m, *fam.verification);
    out["contains_full_set"] = fam.contains(m.all());
    return {"family: " + family_text(m, fam.classes) + "\n" +
                verify_text(m, *fam.verification),
            std::move(out)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisFailed) throw;
    out["hypothesis_holds"] = false;
    out["reason"] = e.what();
    return {std::string("hypothesis failed: ") + e.what() + "\n", std::move(out)};
  }
}

CommandResult cmd_isolated_flats(const CoxeterMatrix& m) {
  IsolatedFlatsResult r = isolated_flats(m);
  ordered_json out = header("isolated-flats", m);
  out["holds"] = r.holds;
  out["via"] = r.via;
  out["classes"] = family_json(m, r.family.classes);
  if (r.violating_subset)
    out["violating_subset"] = subset_json(m, *r.violating_subset);
  else
    out["violating_subset"] = nullptr;
  std::string text = std::string("isolated flats: ") + (r.holds ? "yes" : "no") + "\n";
  if (r.holds)
    text += "peripheral classes: " + family_text(m, r.family.classes) + "\n";
  else
    text += "violating subset: " + subset_text(m, *r.violating_subset) +
            " has non-spherical perp\n";
  return {text, std::move(out)};
}

CommandResult cmd_racg(const InputDocument& doc, const CommandOptions& opts) {
  const SimpleGraph& a = doc.require_graph();
  const CoxeterMatrix& m = doc.require_matrix();
  ConditionIiResult cond = condition_ii_graph(a);
  auto join_sets = enumerate_iaff(a, opts.min_pairs);

  ordered_json out;
  out["command"] = "racg";
  out["vertices"] = ordered_json(a.names());
  out["min_pairs"] = opts.min_pairs;
  ordered_json cj;
  cj["holds"] = cond.holds;
  if (cond.witness) {
    ordered_json w = ordered_json::array();
    for (int v : *cond.witness) w.push_back(a.name(v));
    cj["witness"] = std::move(w);
  } else {
    cj["witness"] = nullptr;
  }
  out["condition_ii"] = std::move(cj);

  ordered_json sets = ordered_json::array();
  for (const auto& js : join_sets) {
    ordered_json e;
    ordered_json pairs = ordered_json::array();
    for (auto [x, y] : js.pairs)
      pairs.push_back(ordered_json::array({a.name(x), a.name(y)}));
    e["pairs"] = std::move(pairs);
    e["members"] = subset_json(m, js.members);
    e["maximal"] = js.maximal;
    e["structure"] = gamma_structure(a, js);
    sets.push_back(std::move(e));
  }
  out["aff_join_sets"] = std::move(sets);

  std::ostringstream text;
  text << "condition (ii): " << (cond.holds ? "holds" : "fails");
  if (cond.witness)
    text << " (witness {" << a.name((*cond.witness)[0]) << ","
         << a.name((*cond.witness)[1]) << "," << a.name((*cond.witness)[2])
         << "})";
  text << "\n";
  if (join_sets.empty()) {
    text << "no affine join sets with at least " << opts.min_pairs << " pairs\n";
  } else {
    for (const auto& js : join_sets)
      text << (js.maximal ? "* " : "  ") << subset_text(m, js.members) << "  "
           << gamma_structure(a, js) << "\n";
  }
  return {text.str(), std::move(out)};
}

CommandResult cmd_dot(const CoxeterMatrix& m) {
  std::ostringstream dot;
  dot << "graph coxeter {\n";
  for (int i = 0; i < m.rank(); ++i)
    dot << "  n" << i << " [label=\"" << m.name(i) << "\"];\n";
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = i + 1; j < m.rank(); ++j) {
      int o = m.order(i, j);
      if (o == 2) continue;
      dot << "  n" << i << " -- n" << j << " [label=\"";
      if (o == kInfinity)
        dot << "∞";
      else
        dot << o;
      dot << "\"];\n";
    }
  }
  dot << "}\n";
  ordered_json out;
  out["command"] = "dot";
  out["dot"] = dot.str();
  return {dot.str(), std::move(out)};
}

}  // namespace

CommandResult run_command(const InputDocument& doc, const std::string& command,
                          const CommandOptions& options) {
  const CoxeterMatrix& m = doc.require_matrix();
  if (command == "classify") return cmd_classify(m, options);
  if (command == "perp") return cmd_perp(m, options);
  if (command == "moussong") return cmd_moussong(m);
  if (command == "relhyp-verify") return cmd_verify(m, options);
  if (command == "relhyp-minimal") return cmd_minimal(m);
  if (command == "decide") return cmd_decide(m);
  if (command == "maxparab") return cmd_maxparab(m, options);
  if (command == "isolated-flats") return cmd_isolated_flats(m);
  if (command == "racg") return cmd_racg(doc, options);
  if (command == "dot") return cmd_dot(m);
  throw Error(ErrorCode::ValidationError, "unknown command '" + command + "'");
}

std::string dump_report(const nlohmann::ordered_json& report) {
  return report.dump(2) + "\n";
}

}  // namespace coxrh
