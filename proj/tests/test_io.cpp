#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxrh/classify.hpp"
#include "coxrh/io.hpp"

using namespace coxrh;

TEST_CASE("txt parsing") {
  InputDocument doc = parse_input("3\n1 2 4\n2 3 0\n", InputFormat::Txt);
  const CoxeterMatrix& m = doc.require_matrix();
  CHECK(m.rank() == 3);
  CHECK(m.order(0, 1) == 4);
  CHECK(m.order(1, 2) == kInfinity);
  CHECK(m.order(0, 2) == 2);

  // comments, blank lines, "inf" spelling
  InputDocument doc2 = parse_input("# header\n2\n\n1 2 inf\n");
  CHECK(doc2.require_matrix().order(0, 1) == kInfinity);

  CHECK_THROWS_AS(parse_input("", InputFormat::Txt), Error);
  CHECK_THROWS_AS(parse_input("2\n1 1 3\n", InputFormat::Txt), Error);
  CHECK_THROWS_AS(parse_input("2\n1 3 3\n", InputFormat::Txt), Error);
  CHECK_THROWS_AS(parse_input("2\n1 2\n", InputFormat::Txt), Error);
  try {
    parse_input("2\n1 2 x\n", InputFormat::Txt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("json parsing") {
  InputDocument doc = parse_input(
      R"({"generators":["a","b","c"],"matrix":[[1,3,2],[3,1,"inf"],[2,"inf",1]]})");
  const CoxeterMatrix& m = doc.require_matrix();
  CHECK(m.rank() == 3);
  CHECK(m.name(0) == "a");
  CHECK(m.order(1, 2) == kInfinity);
  CHECK(m.order(0, 2) == 2);

  // 0 also encodes infinity
  CHECK(parse_input(R"({"matrix":[[1,0],[0,1]]})").require_matrix().order(0, 1) ==
        kInfinity);

  CHECK_THROWS_AS(parse_input("{", InputFormat::Json), Error);
  CHECK_THROWS_AS(parse_input(R"({"matrix":[[1,3],[3]]})"), Error);
  CHECK_THROWS_AS(parse_input(R"({"matrix":[[1,3],[3,1]],"generators":["a"]})"),
                  Error);
  CHECK_THROWS_AS(parse_input(R"({"foo":1})"), Error);
}

TEST_CASE("graph form json") {
  InputDocument doc = parse_input(
      R"({"vertices":["p","q","r","s"],"edges":[["p","q"],[2,3],[3,4],["s","p"]]})");
  REQUIRE(doc.graph.has_value());
  CHECK(doc.graph->has_edge(0, 1));
  CHECK(doc.graph->has_edge(3, 0));
  const CoxeterMatrix& m = doc.require_matrix();
  CHECK(m.order(0, 1) == 2);
  CHECK(m.order(0, 2) == kInfinity);
  CHECK(m.name(3) == "s");

  CHECK_THROWS_AS(parse_input(R"({"vertices":3,"edges":[["a","b"]]})"), Error);

  // matrix-form inputs carry no graph
  InputDocument plain = parse_input("A3");
  CHECK(!plain.graph.has_value());
  CHECK_THROWS_AS(plain.require_graph(), Error);
}

TEST_CASE("named families") {
  CHECK(parse_input("chain4:7").require_matrix().rank() == 7);
  CHECK(parse_input("A5").require_matrix().rank() == 5);
  CHECK(parse_input("B3").require_matrix().order(0, 1) == 4);
  CHECK(parse_input("D4").require_matrix().rank() == 4);
  CHECK(parse_input("E8").require_matrix().rank() == 8);
  CHECK(parse_input("F4").require_matrix().order(1, 2) == 4);
  CHECK(parse_input("H3").require_matrix().order(0, 1) == 5);
  CHECK(parse_input("H4").require_matrix().rank() == 4);
  CHECK(parse_input("I2:7").require_matrix().order(0, 1) == 7);
  CHECK(parse_input("At1").require_matrix().order(0, 1) == kInfinity);
  CHECK(parse_input("At:2").require_matrix().rank() == 3);
  CHECK(parse_input("Bt:3").require_matrix().rank() == 4);
  CHECK(parse_input("Ct:2").require_matrix().rank() == 3);
  CHECK(parse_input("Dt:4").require_matrix().rank() == 5);
  CHECK(parse_input("Et6").require_matrix().rank() == 7);
  CHECK(parse_input("Et7").require_matrix().rank() == 8);
  CHECK(parse_input("Et8").require_matrix().rank() == 9);
  CHECK(parse_input("Ft4").require_matrix().rank() == 5);
  CHECK(parse_input("Gt2").require_matrix().order(0, 1) == 6);
  CHECK(parse_input("racg-cycle:5").require_graph().vertex_count() == 5);
  CHECK_THROWS_AS(parse_input("Z9"), Error);
  CHECK_THROWS_AS(parse_input("chain4:banana"), Error);
}

TEST_CASE("txt round trip") {
  for (const char* fam : {"chain4:7", "Et8", "Bt:4", "I2:9", "racg-cycle:6"}) {
    CAPTURE(fam);
    InputDocument doc = parse_input(fam);
    const CoxeterMatrix& m = doc.require_matrix();
    std::string txt = to_txt(m);
    InputDocument doc2 = parse_input(txt, InputFormat::Txt);
    const CoxeterMatrix& back = doc2.require_matrix();
    CHECK(back.rank() == m.rank());
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j) CHECK(back.order(i, j) == m.order(i, j));
    // serialization is canonical, so a second pass is byte-identical
    CHECK(to_txt(back) == txt);
  }
}

TEST_CASE("options parsing") {
  CommandOptions d = parse_options_json("");
  CHECK(!d.json);
  CHECK(d.min_pairs == 2);
  CHECK(d.tol == 1e-9);

  CommandOptions o = parse_options_json(
      R"({"json":true,"subset":["s1","s2"],"s0":"s3","min_pairs":3,"tol":1e-8,
          "types":[["s1"],["s2","s3"]]})");
  CHECK(o.json);
  CHECK(o.subset == std::vector<std::string>{"s1", "s2"});
  CHECK(o.s0 == "s3");
  CHECK(o.min_pairs == 3);
  CHECK(o.tol == 1e-8);
  REQUIRE(o.types.has_value());
  CHECK(o.types->size() == 2);

  CHECK_THROWS_AS(parse_options_json("{bad"), Error);
}

TEST_CASE("run_command reports") {
  InputDocument doc = parse_input("chain4:7");
  CommandOptions opts;

  CommandResult cls = run_command(doc, "classify", opts);
  CHECK(cls.json["command"] == "classify");
  CHECK(cls.json["spherical"] == false);
  CHECK(cls.json["generators"].size() == 7);

  opts.subset = std::vector<std::string>{"s2", "s3", "s4"};
  CommandResult sub = run_command(doc, "classify", opts);
  CHECK(sub.json["irreducible_affine"] == true);
  CHECK(sub.json["components"][0]["type"] == "~C2");

  // numeric tokens resolve as 1-based indices
  opts.subset = std::vector<std::string>{"2", "3", "4"};
  CHECK(run_command(doc, "classify", opts).json == sub.json);

  opts.subset = std::vector<std::string>{"s4"};
  CommandResult perp = run_command(doc, "perp", opts);
  CHECK(perp.json["perp"] ==
        nlohmann::ordered_json({"s1", "s2", "s6", "s7"}));

  CommandOptions plain;
  CommandResult dec = run_command(doc, "decide", plain);
  CHECK(dec.json["status"] == "relatively-hyperbolic-proper");
  CHECK(dec.json["classes"].size() == 4);

  CommandResult mini = run_command(doc, "relhyp-minimal", plain);
  CHECK(mini.json["verification"]["rh1"] == true);
  CHECK(mini.json["verification"]["rh2"] == true);
  CHECK(mini.json["verification"]["rh2_violation"].is_null());

  CommandOptions mp;
  mp.s0 = "s4";
  CommandResult par = run_command(doc, "maxparab", mp);
  CHECK(par.json["hypothesis_holds"] == true);
  CHECK(par.json["contains_full_set"] == false);

  mp.s0 = "s1";
  CommandResult mp8 = run_command(parse_input("chain4:8"), "maxparab", mp);
  CHECK(mp8.json["hypothesis_holds"] == false);

  CommandResult fl = run_command(doc, "isolated-flats", plain);
  CHECK(fl.json["holds"] == true);
  CHECK(fl.json["violating_subset"].is_null());

  CommandResult mo = run_command(doc, "moussong", plain);
  CHECK(mo.json["hyperbolic"] == false);

  CommandOptions vf;
  vf.types = std::vector<std::vector<std::string>>{
      {"s2", "s3", "s4"}, {"s3", "s4", "s5"}, {"s4", "s5", "s6"},
      {"s1", "s2", "s3", "s5", "s6", "s7"}};
  CommandResult ver = run_command(doc, "relhyp-verify", vf);
  CHECK(ver.json["rh1"] == true);
  CHECK(ver.json["rh2"] == true);

  CHECK_THROWS_AS(run_command(doc, "relhyp-verify", plain), Error);
  CHECK_THROWS_AS(run_command(doc, "maxparab", plain), Error);
  CHECK_THROWS_AS(run_command(doc, "perp", plain), Error);
  CHECK_THROWS_AS(run_command(doc, "nonsense", plain), Error);
}

TEST_CASE("racg command") {
  InputDocument doc = parse_input("racg-cycle:4");
  CommandOptions opts;
  CommandResult r = run_command(doc, "racg", opts);
  CHECK(r.json["condition_ii"]["holds"] == true);
  REQUIRE(r.json["aff_join_sets"].size() == 1);
  CHECK(r.json["aff_join_sets"][0]["structure"] == "(P1 * P3) × (P2 * P4)");
  CHECK(r.json["aff_join_sets"][0]["maximal"] == true);

  // racg needs graph-form input
  CHECK_THROWS_AS(run_command(parse_input("A3"), "racg", opts), Error);
}

TEST_CASE("dot output") {
  CommandResult r = run_command(parse_input("Gt2"), "dot", CommandOptions{});
  CHECK(r.text == "graph coxeter {\n"
                  "  n0 [label=\"s1\"];\n"
                  "  n1 [label=\"s2\"];\n"
                  "  n2 [label=\"s3\"];\n"
                  "  n0 -- n1 [label=\"6\"];\n"
                  "  n1 -- n2 [label=\"3\"];\n"
                  "}\n");
  CommandResult inf = run_command(parse_input("At1"), "dot", CommandOptions{});
  CHECK(inf.text.find("label=\"∞\"") != std::string::npos);
}

TEST_CASE("json report round trip") {
  CommandResult r =
      run_command(parse_input("chain4:7"), "decide", CommandOptions{});
  std::string dumped = dump_report(r.json);
  CHECK(nlohmann::ordered_json::parse(dumped) == r.json);
  // canonical form: two-space indent, trailing newline, stable key order
  CHECK(dump_report(nlohmann::ordered_json::parse(dumped)) == dumped);
  CHECK(dumped.back() == '\n');
}
