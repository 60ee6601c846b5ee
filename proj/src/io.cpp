#include "frob/io.hpp"

#include <fstream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "frob/errors.hpp"
#include "frob/meander.hpp"

namespace frob {

using nlohmann::json;

namespace {

const char* kind_name(AlgebraSpec::Kind k) {
  switch (k) {
    case AlgebraSpec::Kind::Seaweed: return "seaweed";
    case AlgebraSpec::Kind::MaxParabolic: return "max_parabolic";
    case AlgebraSpec::Kind::Rais: return "rais";
    case AlgebraSpec::Kind::Sl: return "sl";
    case AlgebraSpec::Kind::CustomSpan: return "custom_span";
  }
  return "?";
}

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw ValidationError("field '" + field + "': " + why);
}

int get_int(const json& j, const char* field) {
  if (!j.contains(field)) invalid(field, "missing");
  if (!j[field].is_number_integer()) invalid(field, "expected an integer");
  return j[field].get<int>();
}

Composition get_composition(const json& j, const char* field) {
  if (!j.contains(field)) invalid(field, "missing");
  if (!j[field].is_array() || j[field].empty()) invalid(field, "expected a non-empty array of positive integers");
  Composition c;
  for (const auto& part : j[field]) {
    if (!part.is_number_integer() || part.get<int>() <= 0)
      invalid(field, "expected a non-empty array of positive integers");
    c.parts.push_back(part.get<int>());
  }
  return c;
}

std::string rational_string(const json& c, const std::string& field) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  invalid(field, "coefficient must be a \"p/q\" string or an integer");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- specs

AlgebraSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) invalid("kind", "missing or not a string");
  const std::string kind = j["kind"];
  AlgebraSpec spec;
  if (kind == "seaweed") {
    spec.kind = AlgebraSpec::Kind::Seaweed;
    spec.top = get_composition(j, "top");
    spec.bottom = get_composition(j, "bottom");
    spec.n = j.contains("n") ? get_int(j, "n") : spec.top.total();
    if (spec.n < 1) invalid("n", "must be at least 1");
    if (spec.top.total() != spec.n)
      invalid("top", "parts sum to " + std::to_string(spec.top.total()) + ", expected n = " + std::to_string(spec.n));
    if (spec.bottom.total() != spec.n)
      invalid("bottom",
              "parts sum to " + std::to_string(spec.bottom.total()) + ", expected n = " + std::to_string(spec.n));
  } else if (kind == "max_parabolic") {
    spec.kind = AlgebraSpec::Kind::MaxParabolic;
    spec.n = get_int(j, "n");
    spec.i = get_int(j, "i");
    if (spec.n < 2) invalid("n", "must be at least 2");
    if (spec.i < 1 || spec.i > spec.n - 1) invalid("i", "must lie in [1, n-1]");
  } else if (kind == "rais") {
    spec.kind = AlgebraSpec::Kind::Rais;
    spec.n = get_int(j, "n");
    spec.p = get_int(j, "p");
    if (spec.n < 1) invalid("n", "must be at least 1");
    if (spec.p < 1) invalid("p", "must be at least 1");
  } else if (kind == "sl") {
    spec.kind = AlgebraSpec::Kind::Sl;
    spec.n = get_int(j, "n");
    if (spec.n < 2) invalid("n", "must be at least 2");
  } else if (kind == "custom_span") {
    spec.kind = AlgebraSpec::Kind::CustomSpan;
    spec.n = get_int(j, "n");
    if (spec.n < 2) invalid("n", "must be at least 2");
    if (!j.contains("elements") || !j["elements"].is_array()) invalid("elements", "missing or not an array");
    for (const auto& e : j["elements"]) {
      BasisLabel l;
      try {
        l = label_from_json(e);
      } catch (const ValidationError& err) {
        invalid("elements", err.what());
      }
      const bool ok = (l.kind == BasisLabel::Kind::Cartan && l.i >= 1 && l.i < spec.n) ||
                      (l.kind == BasisLabel::Kind::MatrixUnit && l.i != l.j && l.i >= 1 && l.j >= 1 &&
                       l.i <= spec.n && l.j <= spec.n);
      if (!ok) invalid("elements", to_string(l) + " is not a basis vector of sl_" + std::to_string(spec.n));
      spec.elements.push_back(l);
    }
  } else {
    invalid("kind", "unknown kind \"" + kind + "\"");
  }
  return spec;
}

AlgebraSpec parse_spec(std::string_view text) { return spec_from_json(parse_json(text, "spec")); }

json to_json(const AlgebraSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  j["n"] = spec.n;
  switch (spec.kind) {
    case AlgebraSpec::Kind::Seaweed:
      j["top"] = spec.top.parts;
      j["bottom"] = spec.bottom.parts;
      break;
    case AlgebraSpec::Kind::MaxParabolic: j["i"] = spec.i; break;
    case AlgebraSpec::Kind::Rais: j["p"] = spec.p; break;
    case AlgebraSpec::Kind::Sl: break;
    case AlgebraSpec::Kind::CustomSpan:
      j["elements"] = json::array();
      for (const auto& l : spec.elements) j["elements"].push_back(to_json(l));
      break;
  }
  return j;
}

LieAlgebra build_algebra(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraSpec::Kind::Seaweed: return seaweed(spec.top, spec.bottom);
    case AlgebraSpec::Kind::MaxParabolic: return maximal_parabolic(spec.n, spec.i);
    case AlgebraSpec::Kind::Rais: return rais_algebra(spec.n, spec.p);
    case AlgebraSpec::Kind::Sl: return sl(spec.n);
    case AlgebraSpec::Kind::CustomSpan: {
      LieAlgebra lie = span_of_labels(spec.n, spec.elements);
      if (!closure_check(lie)) invalid("elements", "the span is not closed under the bracket");
      return lie;
    }
  }
  throw ValidationError("unknown spec kind");
}

// ---------------------------------------------------------------- labels, functionals, trees

json to_json(const BasisLabel& label) {
  switch (label.kind) {
    case BasisLabel::Kind::Cartan: return {{"h", label.i}};
    case BasisLabel::Kind::MatrixUnit: return {{"i", label.i}, {"j", label.j}};
    case BasisLabel::Kind::Translation: return {{"t", {label.i, label.j}}};
    case BasisLabel::Kind::Generic: return {{"g", label.i}};
  }
  return {};
}

BasisLabel label_from_json(const json& j) {
  const auto as_int = [](const json& v, const char* what) {
    if (!v.is_number_integer()) throw ValidationError(std::string("label field '") + what + "' must be an integer");
    return v.get<int>();
  };
  if (!j.is_object()) throw ValidationError("label must be an object");
  if (j.contains("h")) return BasisLabel::cartan(as_int(j["h"], "h"));
  if (j.contains("i") && j.contains("j")) return BasisLabel::unit(as_int(j["i"], "i"), as_int(j["j"], "j"));
  if (j.contains("t")) {
    if (!j["t"].is_array() || j["t"].size() != 2) throw ValidationError("label field 't' must be [row, col]");
    return BasisLabel::translation(as_int(j["t"][0], "t"), as_int(j["t"][1], "t"));
  }
  if (j.contains("g")) return BasisLabel::generic(as_int(j["g"], "g"));
  throw ValidationError("label needs one of h | i,j | t | g");
}

json to_json(const Functional& f) {
  json terms = json::array();
  for (const auto& [label, c] : f.terms) {
    json t = to_json(label);
    t["c"] = to_string(c);
    terms.push_back(std::move(t));
  }
  return {{"terms", terms}};
}

Functional functional_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) invalid("terms", "missing or not an array");
  Functional f;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("c")) invalid("terms", "each term needs a coefficient \"c\"");
    BasisLabel l;
    try {
      l = label_from_json(t);
    } catch (const ValidationError& e) {
      invalid("terms", e.what());
    }
    try {
      f.add(l, parse_rational(rational_string(t["c"], "terms")));
    } catch (const ParseError& e) {
      invalid("terms", e.what());
    }
  }
  return f;
}

json to_json(const EdgeSet& s) {
  json edges = json::array();
  for (auto [i, j] : s.edges) edges.push_back({i, j});
  return {{"n", s.n}, {"edges", edges}};
}

EdgeSet edge_set_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("edge set must be an object");
  EdgeSet s;
  s.n = get_int(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array()) invalid("edges", "missing or not an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      invalid("edges", "each edge must be [i, j]");
    s.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return s;
}

// ---------------------------------------------------------------- results

json to_json(const DiagonalElement& d) {
  json out = json::array();
  for (const auto& x : d) out.push_back(to_string(x));
  return out;
}

json element_to_json(const LieAlgebra& lie, const Element& x) {
  json terms = json::array();
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (sgn(x[a]) == 0) continue;
    json t = to_json(lie.label(a));
    t["c"] = to_string(x[a]);
    terms.push_back(std::move(t));
  }
  json out{{"terms", terms}};
  if (lie.has_realization()) {
    const Matrix m = to_matrix(lie, x);
    json rows = json::array();
    bool diagonal = true;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_string(m(r, c)));
        if (r != c && sgn(m(r, c)) != 0) diagonal = false;
      }
      rows.push_back(std::move(row));
    }
    out["matrix"] = rows;
    if (diagonal) {
      json diag = json::array();
      for (std::size_t k = 0; k < m.rows(); ++k) diag.push_back(to_string(m(k, k)));
      out["diagonal"] = diag;
    }
  }
  return out;
}

json to_json(const SpectrumReport& report, const LieAlgebra& lie) {
  json values = json::array();
  json spaces = json::array();
  for (const auto& [lambda, m] : report.eigenvalues) {
    values.push_back({{"lambda", lambda}, {"multiplicity", m}});
    json basis = json::array();
    for (const auto& v : report.eigenspaces.at(lambda)) basis.push_back(element_to_json(lie, v)["terms"]);
    spaces.push_back({{"lambda", lambda}, {"basis", basis}});
  }
  return {{"eigenvalues", values},
          {"eigenspaces", spaces},
          {"certified_semisimple", report.certified_semisimple},
          {"unbroken", report.unbroken()}};
}

json to_json(const Tensor2& r) {
  json terms = json::array();
  for (const auto& [key, c] : r.terms)
    terms.push_back({{"labels", {{key[0].row, key[0].col}, {key[1].row, key[1].col}}}, {"c", to_string(c)}});
  return terms;
}

json to_json(const Tensor3& r) {
  json terms = json::array();
  for (const auto& [key, c] : r.terms)
    terms.push_back({{"labels", {{key[0].row, key[0].col}, {key[1].row, key[1].col}, {key[2].row, key[2].col}}},
                     {"c", to_string(c)}});
  return terms;
}

// ---------------------------------------------------------------- sweeps and reports

std::vector<SweepRow> sweep_seaweeds(int n_max, std::size_t trials, std::uint64_t seed, int n_min) {
  if (n_max > kSweepMaxN)
    throw LimitExceeded("seaweed sweep is limited to n <= " + std::to_string(kSweepMaxN));
  if (n_min < 1 || n_min > n_max) throw InvalidParameter("seaweed sweep needs 1 <= n_min <= n_max");
  std::vector<SweepRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const auto comps = compositions(n);
    for (const auto& top : comps)
      for (const auto& bottom : comps) {
        SweepRow row{n, top, bottom, meander_index_sl(top, bottom), 0, false};
        row.generic_index = generic_index(seaweed(top, bottom), trials, seed).index;
        row.agree = static_cast<std::size_t>(row.meander_index) == row.generic_index;
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

json spectrum_checks(const LieAlgebra& lie, const Functional& f, const Element& principal,
                     const SpectrumReport& spectrum) {
  const auto [positive, negative] = generation_check(lie, spectrum);
  return {{"certified_semisimple", spectrum.certified_semisimple},
          {"unbroken", spectrum.unbroken()},
          {"lemma1", lemma1_check(lie, f, spectrum)},
          {"duality", duality_check(lie, f, spectrum)},
          {"derivation", derivation_check(lie, spectrum)},
          {"eigenvectors", eigenvector_check(lie, principal, spectrum)},
          {"top_weight_exclusion", top_weight_exclusion(lie, spectrum)},
          {"generation", {{"positive", positive}, {"negative", negative}}}};
}

json theorem5_json(const LieAlgebra& lie, const EdgeSet& s) {
  const Theorem5Result t = theorem5_check(lie, s);
  json out{{"edge_set", to_json(s)},
           {"frobenius", t.frobenius},
           {"holds", t.holds},
           {"from_tree", to_json(t.from_tree)}};
  if (t.frobenius) out["principal"] = element_to_json(lie, t.principal);
  if (!t.reason.empty()) out["reason"] = t.reason;
  return out;
}

json run_report(const AlgebraSpec& spec, std::size_t trials, std::uint64_t seed, const EdgeSet* small) {
  const LieAlgebra lie = build_algebra(spec);
  const IndexReport index = generic_index(lie, trials, seed);
  json report{{"tool_version", kToolVersion},
              {"spec", to_json(spec)},
              {"algebra", lie.name()},
              {"seed", seed},
              {"trials", trials},
              {"dim", lie.dim()},
              {"index", index.index},
              {"frobenius", index.index == 0},
              {"witness", to_json(index.witness)}};
  json checks = json::object();
  if (index.index == 0) {
    const Element principal = principal_element(lie, index.witness);
    const SpectrumReport spectrum = integer_spectrum(lie, principal);
    report["principal"] = element_to_json(lie, principal);
    report["spectrum"] = to_json(spectrum, lie);
    checks = spectrum_checks(lie, index.witness, principal, spectrum);
    if (lie.dim() > 0) {
      const auto invariance = spectrum_invariance_check(lie, 3, seed);
      json spectra = json::array();
      for (const auto& s : invariance.spectra) {
        json values = json::object();
        for (const auto& [lambda, m] : s) values[std::to_string(lambda)] = m;
        spectra.push_back(values);
      }
      checks["invariance"] = {{"identical", invariance.identical}, {"spectra", spectra}};
    }
  }
  if (small) checks["theorem5"] = theorem5_json(lie, *small);
  report["checks"] = checks;
  return report;
}

// ---------------------------------------------------------------- command line

namespace {

struct Options {
  std::string spec_file;
  std::string functional_file;
  std::string small_file;
  std::string dot_file;
  std::string out_file;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  bool compact = false;
  std::string family = "seaweed";
  int n_max = 0;
  int n_min = 0;
};

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotFrobenius*>(&e) || dynamic_cast<const NotFrobeniusOrUnlucky*>(&e) ||
      dynamic_cast<const SingularMatrix*>(&e))
    return 2;
  return 1;
}

std::string error_name(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const InvalidParameter*>(&e)) return "InvalidParameter";
  if (dynamic_cast<const LimitExceeded*>(&e)) return "LimitExceeded";
  if (dynamic_cast<const NotFrobenius*>(&e)) return "NotFrobenius";
  if (dynamic_cast<const NotFrobeniusOrUnlucky*>(&e)) return "NotFrobeniusOrUnlucky";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const HypothesisViolated*>(&e)) return "HypothesisViolated";
  if (dynamic_cast<const NotATree*>(&e)) return "NotATree";
  if (dynamic_cast<const EdgeNotInSet*>(&e)) return "EdgeNotInSet";
  if (dynamic_cast<const NoAmbient*>(&e)) return "NoAmbient";
  return "Error";
}

AlgebraSpec load_spec(const Options& o) {
  if (o.spec_file.empty()) throw ValidationError("--spec is required");
  return parse_spec(read_file(o.spec_file));
}

std::optional<Functional> load_functional(const Options& o) {
  if (o.functional_file.empty()) return std::nullopt;
  return functional_from_json(parse_json(read_file(o.functional_file), "functional"));
}

std::optional<EdgeSet> load_small(const Options& o) {
  if (o.small_file.empty()) return std::nullopt;
  return edge_set_from_json(parse_json(read_file(o.small_file), "edge set"));
}

json header(const Options& o, const AlgebraSpec& spec, const LieAlgebra& lie) {
  return {{"tool_version", kToolVersion}, {"spec", to_json(spec)}, {"algebra", lie.name()},
          {"seed", o.seed},               {"trials", o.trials},    {"dim", lie.dim()}};
}

/// The functional a command works with: --functional, else F_S from --small,
/// else a sampled Frobenius functional.
Functional chosen_functional(const Options& o, const LieAlgebra& lie) {
  if (auto f = load_functional(o)) return *f;
  if (auto s = load_small(o)) return small_functional(*s);
  return find_frobenius_functional(lie, kDefaultMaxAttempts, o.seed);
}

struct Outcome {
  json body;
  int code = 0;
};

Outcome cmd_index(const Options& o) {
  const auto spec = load_spec(o);
  const LieAlgebra lie = build_algebra(spec);
  const IndexReport r = generic_index(lie, o.trials, o.seed);
  json out = header(o, spec, lie);
  out["index"] = r.index;
  out["frobenius"] = r.index == 0;
  out["witness"] = to_json(r.witness);
  if (auto f = load_functional(o)) out["functional_index"] = index_of_functional(lie, *f);
  return {out, 0};
}

Outcome cmd_frobenius(const Options& o) {
  const auto spec = load_spec(o);
  const LieAlgebra lie = build_algebra(spec);
  json out = header(o, spec, lie);
  if (auto f = load_functional(o)) {
    const bool ok = is_frobenius(lie, *f);
    out["functional"] = to_json(*f);
    out["frobenius"] = ok;
    out["index_of_functional"] = index_of_functional(lie, *f);
    return {out, ok ? 0 : 2};
  }
  const Functional f = find_frobenius_functional(lie, kDefaultMaxAttempts, o.seed);
  out["functional"] = to_json(f);
  out["frobenius"] = true;
  return {out, 0};
}

Outcome cmd_principal(const Options& o) {
  const auto spec = load_spec(o);
  const LieAlgebra lie = build_algebra(spec);
  const Functional f = chosen_functional(o, lie);
  json out = header(o, spec, lie);
  out["functional"] = to_json(f);
  out["principal"] = element_to_json(lie, principal_element(lie, f));
  if (auto s = load_small(o)) out["from_tree"] = to_json(principal_from_tree(*s));
  return {out, 0};
}

Outcome cmd_spectrum(const Options& o) {
  const auto spec = load_spec(o);
  const auto small = load_small(o);
  if (o.functional_file.empty() && !small) {
    json report = run_report(spec, o.trials, o.seed);
    if (!report["frobenius"].get<bool>()) throw NotFrobenius(report["algebra"].get<std::string>() + " is not Frobenius");
    return {report, 0};
  }
  const LieAlgebra lie = build_algebra(spec);
  const Functional f = chosen_functional(o, lie);
  const Element principal = principal_element(lie, f);
  const SpectrumReport spectrum = integer_spectrum(lie, principal);
  json out = header(o, spec, lie);
  out["functional"] = to_json(f);
  out["principal"] = element_to_json(lie, principal);
  out["spectrum"] = to_json(spectrum, lie);
  out["checks"] = spectrum_checks(lie, f, principal, spectrum);
  return {out, spectrum.certified_semisimple ? 0 : 2};
}

Outcome cmd_meander(const Options& o) {
  const auto spec = load_spec(o);
  Composition top, bottom;
  if (spec.kind == AlgebraSpec::Kind::Seaweed) {
    top = spec.top;
    bottom = spec.bottom;
  } else if (spec.kind == AlgebraSpec::Kind::MaxParabolic) {
    top = Composition{{spec.i, spec.n - spec.i}};
    bottom = Composition{{spec.n}};
  } else if (spec.kind == AlgebraSpec::Kind::Sl) {
    top = bottom = Composition{{spec.n}};
  } else {
    throw ValidationError("field 'kind': meander graphs exist for seaweed, max_parabolic and sl only");
  }
  const MeanderGraph g = build_meander(top, bottom);
  const ComponentCount c = count_components(g);
  json arcs_top = json::array(), arcs_bottom = json::array();
  for (auto [u, v] : g.top_arcs) arcs_top.push_back({u, v});
  for (auto [u, v] : g.bottom_arcs) arcs_bottom.push_back({u, v});
  json out{{"tool_version", kToolVersion},
           {"spec", to_json(spec)},
           {"n", g.n},
           {"top_arcs", arcs_top},
           {"bottom_arcs", arcs_bottom},
           {"cycles", c.cycles},
           {"paths", c.paths},
           {"index", meander_index_sl(top, bottom)}};
  out["frobenius"] = out["index"].get<int>() == 0;
  if (!o.dot_file.empty()) {
    std::ofstream dot(o.dot_file, std::ios::binary);
    if (!dot) throw ValidationError("cannot write " + o.dot_file);
    dot << to_dot(g);
  }
  return {out, 0};
}

Outcome cmd_cybe(const Options& o) {
  const auto spec = load_spec(o);
  const LieAlgebra lie = build_algebra(spec);
  const Functional f = chosen_functional(o, lie);
  const Tensor2 r = r_matrix(lie, f);
  const Tensor3 residual = cybe_residual(r);
  json out = header(o, spec, lie);
  out["functional"] = to_json(f);
  out["r"] = to_json(r);
  Tensor2 negated{r.n, {}};
  for (const auto& [k, c] : r.terms) negated.terms[k] = -c;
  out["skew"] = r.flip() == negated;
  out["residual_terms"] = residual.terms.size();
  out["residual"] = to_json(residual);
  out["cybe"] = residual.is_zero();
  return {out, residual.is_zero() ? 0 : 2};
}

Outcome cmd_theorem5(const Options& o) {
  const auto spec = load_spec(o);
  const auto small = load_small(o);
  if (!small) throw ValidationError("--small is required");
  const LieAlgebra lie = build_algebra(spec);
  json out = header(o, spec, lie);
  out["theorem5"] = theorem5_json(lie, *small);
  return {out, out["theorem5"]["holds"].get<bool>() ? 0 : 2};
}

Outcome cmd_sweep(const Options& o) {
  json rows = json::array();
  bool all_agree = true;
  if (o.family == "seaweed") {
    const int n_max = o.n_max > 0 ? o.n_max : 3;
    const int n_min = o.n_min > 0 ? o.n_min : n_max;
    for (const auto& r : sweep_seaweeds(n_max, o.trials, o.seed, n_min)) {
      rows.push_back({{"n", r.n},
                      {"top", r.top.parts},
                      {"bottom", r.bottom.parts},
                      {"meander_index", r.meander_index},
                      {"generic_index", r.generic_index},
                      {"agree", r.agree}});
      all_agree = all_agree && r.agree;
    }
  } else if (o.family == "max-parabolic") {
    const int n_max = o.n_max > 0 ? o.n_max : 8;
    if (n_max > 12) throw LimitExceeded("max-parabolic sweep is limited to n <= 12");
    for (int n = std::max(2, o.n_min); n <= n_max; ++n)
      for (int i = 1; i < n; ++i) {
        const auto r = generic_index(maximal_parabolic(n, i), o.trials, o.seed);
        const bool coprime = std::gcd(i, n) == 1;
        rows.push_back({{"n", n},
                        {"i", i},
                        {"dim", r.dim},
                        {"index", r.index},
                        {"frobenius", r.index == 0},
                        {"coprime", coprime},
                        {"agree", (r.index == 0) == coprime}});
        all_agree = all_agree && ((r.index == 0) == coprime);
      }
  } else if (o.family == "rais") {
    const int n_max = o.n_max > 0 ? o.n_max : 5;
    if (n_max > 6) throw LimitExceeded("rais sweep is limited to n <= 6");
    for (int n = std::max(1, o.n_min); n <= n_max; ++n)
      for (int p = 1; p <= n; ++p) {
        const auto r = generic_index(rais_algebra(n, p), o.trials, o.seed);
        const bool divides = n % p == 0;
        rows.push_back({{"n", n},
                        {"p", p},
                        {"dim", r.dim},
                        {"index", r.index},
                        {"frobenius", r.index == 0},
                        {"divides", divides},
                        {"agree", (r.index == 0) == divides}});
        all_agree = all_agree && ((r.index == 0) == divides);
      }
  } else {
    throw ValidationError("field 'family': expected seaweed, max-parabolic or rais");
  }
  return {{{"tool_version", kToolVersion},
           {"family", o.family},
           {"seed", o.seed},
           {"trials", o.trials},
           {"rows", rows},
           {"all_agree", all_agree}},
          0};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frobenius Lie algebra toolkit: index, principal elements, spectra, r-matrices", "frobtool"};
  app.require_subcommand(1);
  std::map<std::string, Outcome (*)(const Options&)> handlers{
      {"index", cmd_index},       {"frobenius", cmd_frobenius}, {"principal", cmd_principal},
      {"spectrum", cmd_spectrum}, {"meander", cmd_meander},     {"cybe", cmd_cybe},
      {"theorem5", cmd_theorem5}, {"sweep", cmd_sweep}};
  const std::map<std::string, std::string> help{
      {"index", "Sampled generic index of an algebra"},
      {"frobenius", "Find (or check) a Frobenius functional"},
      {"principal", "Principal element of a Frobenius functional"},
      {"spectrum", "Integer spectrum of ad of the principal element, with property checks"},
      {"meander", "Meander graph, its components and the index it predicts"},
      {"cybe", "Classical r-matrix of a Frobenius functional and its Yang-Baxter residual"},
      {"theorem5", "Compare the principal element of a small functional with its tree formula"},
      {"sweep", "Index sweeps over seaweed, maximal parabolic or Rais families"}};
  for (const auto& [name, _] : handlers) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--spec", o.spec_file, "AlgebraSpec JSON file");
    sub->add_option("--functional", o.functional_file, "Functional JSON file");
    sub->add_option("--small", o.small_file, "EdgeSet JSON file for a small functional");
    sub->add_option("--trials", o.trials, "Sampled functionals per index computation")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for all sampling");
    sub->add_option("--dot", o.dot_file, "Write the meander graph as DOT");
    sub->add_option("--out", o.out_file, "Write the JSON result to this file");
    sub->add_flag("--json", o.compact, "Compact single-line JSON");
    if (name == "sweep") {
      sub->add_option("--family", o.family, "seaweed | max-parabolic | rais");
      sub->add_option("--n-max", o.n_max, "Largest n");
      sub->add_option("--n-min", o.n_min, "Smallest n (seaweed default: n-max)");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  Outcome outcome;
  try {
    for (const auto* sub : app.get_subcommands()) outcome = handlers.at(sub->get_name())(o);
  } catch (const std::exception& e) {
    err << error_name(e) << ": " << e.what() << "\n";
    out << json{{"error", error_name(e)}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e);
  }

  const std::string text = o.compact ? outcome.body.dump() : outcome.body.dump(2);
  if (o.out_file.empty()) {
    out << text << "\n";
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "cannot write " << o.out_file << "\n";
      return 1;
    }
    file << text << "\n";
  }
  return outcome.code;
}

}  // namespace frob
