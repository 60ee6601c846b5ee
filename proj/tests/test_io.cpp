#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frob/errors.hpp"
#include "frob/io.hpp"

using namespace frob;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "frob_io_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("parse_spec examples") {
  const auto s = parse_spec(R"({"kind":"seaweed","n":4,"top":[2,2],"bottom":[4]})");
  CHECK(s.kind == AlgebraSpec::Kind::Seaweed);
  CHECK(s.top == Composition{{2, 2}});
  CHECK(s.bottom == Composition{{4}});
  const auto p = parse_spec(R"({"kind":"max_parabolic","n":5,"i":2})");
  CHECK(p.kind == AlgebraSpec::Kind::MaxParabolic);
  CHECK(p.i == 2);

  try {
    parse_spec(R"({"kind":"seaweed","n":4,"top":[3,2],"bottom":[4]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("'top'") != std::string::npos);
  }
}

TEST_CASE("parse_spec errors") {
  CHECK_THROWS_AS(parse_spec("{not json"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"torus"})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"max_parabolic","n":5,"i":5})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"max_parabolic","n":"5","i":1})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"rais","n":2,"p":0})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"sl","n":1})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"seaweed","top":[2,0],"bottom":[2]})"), ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"kind":"custom_span","n":2,"elements":[{"i":1,"j":1}]})"), ValidationError);
}

TEST_CASE("custom spans must be subalgebras") {
  const auto closed = parse_spec(R"({"kind":"custom_span","n":3,"elements":[{"h":1},{"i":1,"j":2}]})");
  CHECK(build_algebra(closed).dim() == 2);
  const auto open = parse_spec(R"({"kind":"custom_span","n":2,"elements":[{"i":1,"j":2},{"i":2,"j":1}]})");
  CHECK_THROWS_AS(build_algebra(open), ValidationError);
}

TEST_CASE("spec round trip") {
  std::vector<AlgebraSpec> specs;
  for (int n = 1; n <= 4; ++n)
    for (const auto& top : compositions(n))
      for (const auto& bottom : compositions(n)) specs.push_back({AlgebraSpec::Kind::Seaweed, n, top, bottom});
  for (int n = 2; n <= 5; ++n) {
    specs.push_back({AlgebraSpec::Kind::Sl, n});
    for (int i = 1; i < n; ++i) specs.push_back({AlgebraSpec::Kind::MaxParabolic, n, {}, {}, i});
    for (int p = 1; p <= n; ++p) specs.push_back({AlgebraSpec::Kind::Rais, n, {}, {}, 0, p});
  }
  specs.push_back({AlgebraSpec::Kind::CustomSpan, 3, {}, {}, 0, 0,
                   {BasisLabel::cartan(1), BasisLabel::cartan(2), BasisLabel::unit(1, 3)}});
  for (const auto& s : specs) CHECK(parse_spec(to_json(s).dump()) == s);
}

TEST_CASE("functional and edge set JSON") {
  const Functional f = functional_from_json(json::parse(R"({"terms":[{"i":1,"j":2,"c":"1"}, {"h":1,"c":"1/2"}]})"));
  CHECK(f.terms.at(BasisLabel::unit(1, 2)) == 1);
  CHECK(f.terms.at(BasisLabel::cartan(1)) == Rational(1, 2));
  CHECK(functional_from_json(to_json(f)) == f);
  CHECK(to_json(f).dump() == R"({"terms":[{"c":"1/2","h":1},{"c":"1","i":1,"j":2}]})");
  CHECK_THROWS_AS(functional_from_json(json::parse(R"({"terms":[{"i":1,"j":2,"c":"1/0"}]})")), ValidationError);
  CHECK_THROWS_AS(functional_from_json(json::parse(R"({"terms":[{"i":1,"j":2}]})")), ValidationError);

  const EdgeSet s = edge_set_from_json(json::parse(R"({"n":3,"edges":[[1,2],[2,3]]})"));
  CHECK(s.n == 3);
  CHECK(s.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(to_json(s).dump() == R"({"edges":[[1,2],[2,3]],"n":3})");
  CHECK_THROWS_AS(edge_set_from_json(json::parse(R"({"n":3,"edges":[[1]]})")), ValidationError);
}

TEST_CASE("tensor JSON is sorted and exact") {
  Tensor2 r{2, {}};
  r.add({UnitLabel{2, 2}, UnitLabel{1, 2}}, Rational(1, 2));
  r.add({UnitLabel{1, 1}, UnitLabel{1, 2}}, Rational(-1, 2));
  CHECK(to_json(r).dump() ==
        R"([{"c":"-1/2","labels":[[1,1],[1,2]]},{"c":"1/2","labels":[[2,2],[1,2]]}])");
}

TEST_CASE("index command") {
  const auto spec = write_temp("p42.json", R"({"kind":"max_parabolic","n":4,"i":2})");
  const Run r = run({"index", "--spec", spec, "--trials", "5", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.body()["index"] == 1);
  CHECK(r.body()["frobenius"] == false);
  CHECK(r.body()["seed"] == 42);
}

TEST_CASE("principal command with a small functional") {
  const auto spec = write_temp("p31.json", R"({"kind":"max_parabolic","n":3,"i":1})");
  const auto tree = write_temp("tree.json", R"({"n":3,"edges":[[1,2],[2,3]]})");
  const Run r = run({"principal", "--spec", spec, "--small", tree});
  CHECK(r.code == 0);
  CHECK(r.body()["principal"]["diagonal"] == json::array({"1", "0", "-1"}));
  CHECK(r.body()["from_tree"] == json::array({"1", "0", "-1"}));
}

TEST_CASE("sweep command") {
  const Run mp = run({"sweep", "--family", "max-parabolic", "--n-max", "8"});
  CHECK(mp.code == 0);
  CHECK(mp.body()["all_agree"] == true);
  CHECK(mp.body()["rows"].size() == 28);
  for (const auto& row : mp.body()["rows"]) CHECK(row["frobenius"] == row["coprime"]);

  const Run three = run({"sweep", "--family", "seaweed", "--n-max", "3"});
  CHECK(three.body()["rows"].size() == 16);
  CHECK(three.body()["all_agree"] == true);

  const Run two = run({"sweep", "--family", "seaweed", "--n-max", "2"});
  const auto rows = two.body()["rows"];
  CHECK(rows.size() == 4);
  for (const auto& row : rows)
    if (row["top"] == json::array({2}) && row["bottom"] == json::array({2})) CHECK(row["generic_index"] == 1);

  const Run eight = run({"sweep", "--family", "seaweed", "--n-max", "8"});
  CHECK(eight.code == 1);
  CHECK(eight.body()["error"] == "LimitExceeded");
  CHECK_THROWS_AS(sweep_seaweeds(8, 5, 0), LimitExceeded);

  CHECK(sweep_seaweeds(3, 5, 0).size() == 21);

  const Run rais = run({"sweep", "--family", "rais", "--n-max", "4"});
  CHECK(rais.body()["all_agree"] == true);
}

TEST_CASE("exit codes") {
  const auto bad = write_temp("bad.json", R"({"kind":"seaweed","n":4,"top":[3,2],"bottom":[4]})");
  const Run invalid = run({"index", "--spec", bad});
  CHECK(invalid.code == 1);
  CHECK(invalid.body()["error"] == "ValidationError");

  CHECK(run({"index", "--spec", "/nonexistent/spec.json"}).code == 1);
  CHECK(run({"index"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);

  const auto sl2 = write_temp("sl2.json", R"({"kind":"sl","n":2})");
  const Run nf = run({"principal", "--spec", sl2});
  CHECK(nf.code == 2);
  CHECK(nf.body()["error"] == "NotFrobeniusOrUnlucky");
  CHECK(run({"spectrum", "--spec", sl2}).code == 2);
  CHECK(run({"cybe", "--spec", sl2}).code == 2);

  const auto p42 = write_temp("p42b.json", R"({"kind":"max_parabolic","n":4,"i":2})");
  CHECK(run({"frobenius", "--spec", p42}).code == 2);
  const auto f = write_temp("f.json", R"({"terms":[{"i":1,"j":2,"c":"1"}]})");
  CHECK(run({"frobenius", "--spec", p42, "--functional", f}).code == 2);

  const auto tree = write_temp("tree42.json", R"({"n":4,"edges":[[1,2],[2,3],[3,4]]})");
  const Run t5 = run({"theorem5", "--spec", p42, "--small", tree});
  CHECK(t5.code == 2);
  CHECK(t5.body()["theorem5"]["frobenius"] == false);

  const auto outside = write_temp("tree_out.json", R"({"n":3,"edges":[[2,1],[2,3]]})");
  const auto p31 = write_temp("p31b.json", R"({"kind":"max_parabolic","n":3,"i":1})");
  CHECK(run({"theorem5", "--spec", p31, "--small", outside}).code == 1);
  CHECK(run({"theorem5", "--spec", p31}).code == 1);
}

TEST_CASE("meander, cybe, theorem5 and spectrum commands") {
  const auto spec = write_temp("sw.json", R"({"kind":"seaweed","n":4,"top":[4],"bottom":[2,2]})");
  const auto dot = (fs::temp_directory_path() / "frob_io_test" / "m.dot").string();
  const Run m = run({"meander", "--spec", spec, "--dot", dot});
  CHECK(m.code == 0);
  CHECK(m.body()["cycles"] == 1);
  CHECK(m.body()["paths"] == 0);
  CHECK(m.body()["index"] == 1);
  CHECK(slurp(dot).rfind("graph meander {", 0) == 0);

  const auto p31 = write_temp("p31c.json", R"({"kind":"max_parabolic","n":3,"i":1})");
  const Run c = run({"cybe", "--spec", p31});
  CHECK(c.code == 0);
  CHECK(c.body()["cybe"] == true);
  CHECK(c.body()["skew"] == true);

  const auto tree = write_temp("tree3.json", R"({"n":3,"edges":[[1,2],[2,3]]})");
  const Run t = run({"theorem5", "--spec", p31, "--small", tree});
  CHECK(t.code == 0);
  CHECK(t.body()["theorem5"]["holds"] == true);

  const Run s = run({"spectrum", "--spec", p31});
  CHECK(s.code == 0);
  const json checks = s.body()["checks"];
  for (const char* k : {"certified_semisimple", "unbroken", "lemma1", "duality", "derivation", "eigenvectors"})
    CHECK(checks[k] == true);
  CHECK(checks["invariance"]["identical"] == true);
}

TEST_CASE("reports are byte-identical across runs and --out writes the same bytes") {
  const auto spec = write_temp("p52.json", R"({"kind":"max_parabolic","n":5,"i":2})");
  const Run a = run({"spectrum", "--spec", spec, "--seed", "7"});
  const Run b = run({"spectrum", "--spec", spec, "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto out = (fs::temp_directory_path() / "frob_io_test" / "report.json").string();
  CHECK(run({"spectrum", "--spec", spec, "--seed", "7", "--out", out}).code == 0);
  CHECK(slurp(out) == a.out);
  const Run compact = run({"spectrum", "--spec", spec, "--seed", "7", "--json"});
  CHECK(json::parse(compact.out) == a.body());
  CHECK(compact.out.find('\n') == compact.out.size() - 1);
}
