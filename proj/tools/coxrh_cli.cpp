#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxrh.h"

namespace {

struct CommonArgs {
  std::string input;
  std::string format = "auto";
  bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input,
                  "Input: a file path, a named family (chain4:7, A5, Et8, "
                  "racg-cycle:5, ...), or '-' for stdin")
      ->required();
  cmd->add_option("--format", args.format, "Input format: auto, json, txt")
      ->check(CLI::IsMember({"auto", "json", "txt"}));
  cmd->add_flag("--json", args.json, "Emit the machine-readable JSON report");
}

std::string read_input_text(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;  // treated as inline text (named family)
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

int run(const std::string& command, const CommonArgs& args,
        const std::string& extra_options) {
  std::string text = read_input_text(args.input);
  int format = COXRH_FORMAT_AUTO;
  if (args.format == "json") format = COXRH_FORMAT_JSON;
  if (args.format == "txt") format = COXRH_FORMAT_TXT;

  coxrh_input* input = nullptr;
  char* error = nullptr;
  int rc = coxrh_input_parse(text.c_str(), format, &input, &error);
  if (rc != COXRH_OK) {
    std::cerr << "error: " << (error ? error : "parse failed") << "\n";
    coxrh_string_free(error);
    return rc == COXRH_ECAP ? 3 : 2;
  }

  std::string options = "{\"json\":";
  options += args.json ? "true" : "false";
  if (!extra_options.empty()) options += "," + extra_options;
  options += "}";

  char* report = nullptr;
  rc = coxrh_run(input, command.c_str(), options.c_str(), &report, &error);
  coxrh_input_free(input);
  if (rc != COXRH_OK) {
    std::cerr << "error: " << (error ? error : "command failed") << "\n";
    coxrh_string_free(error);
    return rc == COXRH_ECAP ? 3 : 2;
  }
  std::cout << report;
  coxrh_string_free(report);
  return 0;
}

std::string name_list_json(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += json_escape(names[i]);
  }
  return out + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative hyperbolicity of Coxeter groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(coxrh_version()));

  struct Sub {
    CLI::App* cmd;
    CommonArgs args;
  };

  Sub classify, perp, moussong, verify, minimal, decide, maxparab, flats, racg,
      dot;
  std::vector<std::string> subset;
  std::string types;  // JSON list of name lists
  std::string s0;
  int min_pairs = 2;

  classify.cmd = app.add_subcommand(
      "classify", "Classify a generator subset against the catalogs");
  add_common(classify.cmd, classify.args);
  classify.cmd->add_option("--subset", subset,
                           "Generators (names or 1-based indices); defaults "
                           "to the whole set");

  perp.cmd = app.add_subcommand("perp", "Commuting complement of a subset");
  add_common(perp.cmd, perp.args);
  perp.cmd->add_option("--subset", subset, "Generators of the subset")
      ->required();

  moussong.cmd =
      app.add_subcommand("moussong", "Gromov hyperbolicity criterion");
  add_common(moussong.cmd, moussong.args);

  verify.cmd = app.add_subcommand(
      "relhyp-verify", "Check (RH1)/(RH2) for a candidate family");
  add_common(verify.cmd, verify.args);
  verify.cmd
      ->add_option("--types", types,
                   "JSON list of name lists, e.g. "
                   "'[[\"s1\",\"s2\"],[\"s3\",\"s4\"]]'")
      ->required();

  minimal.cmd = app.add_subcommand("relhyp-minimal",
                                   "Canonical minimal peripheral family");
  add_common(minimal.cmd, minimal.args);

  decide.cmd = app.add_subcommand(
      "decide", "Hyperbolic, properly relatively hyperbolic, or neither");
  add_common(decide.cmd, decide.args);

  maxparab.cmd = app.add_subcommand(
      "maxparab", "Maximal-parabolic peripheral family for one generator");
  add_common(maxparab.cmd, maxparab.args);
  maxparab.cmd->add_option("--s0", s0, "Distinguished generator")->required();

  flats.cmd =
      app.add_subcommand("isolated-flats", "Isolated-flats criterion");
  add_common(flats.cmd, flats.args);

  racg.cmd = app.add_subcommand(
      "racg", "Right-angled specialization over a defining graph");
  add_common(racg.cmd, racg.args);
  racg.cmd->add_option("--min-pairs", min_pairs,
                       "Minimum number of non-edge pairs in a join set");

  dot.cmd = app.add_subcommand("dot", "Graphviz rendering of the diagram");
  add_common(dot.cmd, dot.args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify.cmd->parsed()) {
      std::string extra;
      if (!subset.empty()) extra = "\"subset\":" + name_list_json(subset);
      return run("classify", classify.args, extra);
    }
    if (perp.cmd->parsed())
      return run("perp", perp.args, "\"subset\":" + name_list_json(subset));
    if (moussong.cmd->parsed()) return run("moussong", moussong.args, "");
    if (verify.cmd->parsed())
      return run("relhyp-verify", verify.args, "\"types\":" + types);
    if (minimal.cmd->parsed()) return run("relhyp-minimal", minimal.args, "");
    if (decide.cmd->parsed()) return run("decide", decide.args, "");
    if (maxparab.cmd->parsed())
      return run("maxparab", maxparab.args, "\"s0\":" + json_escape(s0));
    if (flats.cmd->parsed()) return run("isolated-flats", flats.args, "");
    if (racg.cmd->parsed())
      return run("racg", racg.args,
                 "\"min_pairs\":" + std::to_string(min_pairs));
    if (dot.cmd->parsed()) return run("dot", dot.args, "");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
