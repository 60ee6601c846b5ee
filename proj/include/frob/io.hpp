#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frob/cybe.hpp"
#include "frob/index.hpp"
#include "frob/lie.hpp"
#include "frob/spectrum.hpp"
#include "frob/tree.hpp"

namespace frob {

inline constexpr const char* kToolVersion = "0.1.0";

/// JSON description of an algebra to build.
struct AlgebraSpec {
  enum class Kind { Seaweed, MaxParabolic, Rais, Sl, CustomSpan };

  Kind kind = Kind::Sl;
  int n = 0;
  Composition top;
  Composition bottom;
  int i = 0;
  int p = 0;
  std::vector<BasisLabel> elements;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Throws ParseError on malformed JSON and ValidationError (naming the field)
/// on bad parameters.
AlgebraSpec parse_spec(std::string_view text);
AlgebraSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlgebraSpec& spec);

/// Throws ValidationError when a custom span is not a subalgebra.
LieAlgebra build_algebra(const AlgebraSpec& spec);

nlohmann::json to_json(const BasisLabel& label);
BasisLabel label_from_json(const nlohmann::json& j);

/// {"terms":[{"i":1,"j":2,"c":"1"},{"h":1,"c":"1/2"}]}
nlohmann::json to_json(const Functional& f);
Functional functional_from_json(const nlohmann::json& j);

/// {"n":3,"edges":[[1,2],[2,3]]}
nlohmann::json to_json(const EdgeSet& s);
EdgeSet edge_set_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const LieAlgebra& lie, const Element& x);
nlohmann::json to_json(const SpectrumReport& report, const LieAlgebra& lie);
nlohmann::json to_json(const Tensor2& r);
nlohmann::json to_json(const Tensor3& r);
nlohmann::json to_json(const DiagonalElement& d);

struct SweepRow {
  int n = 0;
  Composition top;
  Composition bottom;
  int meander_index = 0;
  std::size_t generic_index = 0;
  bool agree = false;
};

inline constexpr int kSweepMaxN = 7;

/// Every ordered pair of compositions of every n in [n_min, n_max], sorted by
/// (n, top, bottom). Throws LimitExceeded when n_max > 7.
std::vector<SweepRow> sweep_seaweeds(int n_max, std::size_t trials, std::uint64_t seed, int n_min = 1);

/// Full report for one algebra: index, witness, principal element, spectrum,
/// and every applicable check. `small` adds the tree-based checks.
nlohmann::json run_report(const AlgebraSpec& spec, std::size_t trials, std::uint64_t seed,
                          const EdgeSet* small = nullptr);

/// Command-line entry point. Writes JSON to `out` and diagnostics to `err`.
/// Exit code 0 on success, 1 on validation/usage errors, 2 on mathematical
/// failure (e.g. a Frobenius input was required).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob
