#pragma once

// Exact checks of the triple relations, the compatibility-condition
// scalar and the Z-grading generated by a CAO set.

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wqo/cao.hpp"
#include "wqo/exec.hpp"
#include "wqo/span.hpp"

namespace wqo {

struct CheckReport {
  std::string check_name;
  bool passed = false;
  std::optional<nlohmann::json> witness;  // present whenever passed is false
  std::string details;
};

nlohmann::json to_json(const CheckReport& r);

/// [{x+_ri, x-_sj}, x(+/-)_tk] for all label triples of an SL3 set.
CheckReport check_sl_triple(const CaoSet& caos, Exec exec = Exec::parallel);

/// [{x+_rk, x-_rk}, x(+/-)_sj] = +/-(<k><j> d_|k||j| - d_rs) x(+/-)_sj for
/// OSPB, OSPD1 and OSPD2 sets.
CheckReport check_osp_triple(const CaoSet& caos, Exec exec = Exec::parallel);

/// Sum over all pairs of {x+, x-}.
SuperMatrix cc_sum(const CaoSet& caos, Exec exec = Exec::parallel);

struct CcResult {
  RadElement lambda;  // [S, x+] = lambda x+ and [S, x-] = -lambda x-
  CheckReport report;
  bool usable = false;  // report passed and lambda != 0
  int mu = 1;           // -sign(lambda), so that -mu*c = lambda
  RadElement c;         // |lambda|
  std::string interchange_note;
};

CcResult cc_scalar(const CaoSet& caos, Exec exec = Exec::parallel);

/// Closed-form lambda per family, in the S+ = lambda x+ normalization.
RadElement expected_lambda(Family family, const FamilyParams& params);

/// Green's trilinear relations for all signs and all r, s, t.
CheckReport check_parabose(const std::vector<ParaBosePair>& bops, Exec exec = Exec::parallel);

struct GradingReport {
  std::array<std::size_t, 5> dims{};  // G-2, G-1, G0, G+1, G+2
  int length = 0;
  bool closure_ok = false;
  bool parity_consistent = false;

  std::size_t dim(int degree) const { return dims[static_cast<std::size_t>(degree + 2)]; }
  bool operator==(const GradingReport&) const = default;
};

struct GradingAnalysis {
  GradingReport report;
  std::vector<MatrixSpan> components;  // indexed by degree + 2

  const MatrixSpan& component(int degree) const { return components[static_cast<std::size_t>(degree + 2)]; }
};

/// Spans of G(+/-1), G0 = [[G-1, G+1]], G(+/-2) = [[G(+/-1), G(+/-1)]],
/// closure of all generator brackets and parity consistency.
GradingAnalysis analyze_grading(const CaoSet& caos, Exec exec = Exec::parallel);
GradingReport grading_analysis(const CaoSet& caos, Exec exec = Exec::parallel);

nlohmann::json to_json(const GradingReport& g);
GradingReport grading_from_json(const nlohmann::json& j);

/// Super-Jacobi identity on `count` homogeneous triples drawn from the
/// graded components; deterministic in `seed`. Throws on count < 1.
CheckReport superjacobi_sample(const CaoSet& caos, std::uint64_t seed, int count);
CheckReport superjacobi_sample(const GradingAnalysis& grading, std::uint64_t seed, int count);

}  // namespace wqo
