#include <random>
#include <stdexcept>

#include "wqo/verifier.hpp"

namespace wqo {

namespace {

struct Generator {
  int degree;
  std::size_t index;
};

void insert_all(MatrixSpan& span, const std::vector<SuperMatrix>& candidates) {
  for (const auto& c : candidates)
    if (!c.is_zero()) span.insert(c);
}

}  // namespace

GradingAnalysis analyze_grading(const CaoSet& caos, Exec exec) {
  GradingAnalysis out;
  for (int d = -2; d <= 2; ++d) out.components.emplace_back(caos.dim);
  auto comp = [&](int d) -> MatrixSpan& { return out.components[static_cast<std::size_t>(d + 2)]; };

  const std::size_t M = caos.size();
  const auto& x = caos.pairs;
  for (const auto& pr : x) {
    comp(1).insert(pr.plus);
    comp(-1).insert(pr.minus);
  }

  // Candidates are generated in parallel and inserted in index order, so
  // the chosen generators do not depend on the execution policy.
  insert_all(comp(0), generate_indexed<SuperMatrix>(
                          M * M, exec, [&](std::size_t i) { return superbracket(x[i / M].minus, x[i % M].plus); }));
  insert_all(comp(2), generate_indexed<SuperMatrix>(M * M, exec, [&](std::size_t i) {
               return i / M <= i % M ? superbracket(x[i / M].plus, x[i % M].plus) : SuperMatrix(caos.dim);
             }));
  insert_all(comp(-2), generate_indexed<SuperMatrix>(M * M, exec, [&](std::size_t i) {
               return i / M <= i % M ? superbracket(x[i / M].minus, x[i % M].minus) : SuperMatrix(caos.dim);
             }));

  auto& rep = out.report;
  for (int d = -2; d <= 2; ++d) rep.dims[static_cast<std::size_t>(d + 2)] = comp(d).rank();
  rep.length = rep.dim(2) == 0 && rep.dim(-2) == 0 ? 3 : 5;

  rep.parity_consistent = true;
  for (int d = -2; d <= 2; ++d) {
    const Parity want = (d == 1 || d == -1) ? Parity::odd : Parity::even;
    for (const auto& g : comp(d).generators())
      if (g.parity() != want) rep.parity_consistent = false;
  }

  // Closure over every unordered pair of generators.
  std::vector<Generator> gens;
  for (int d = -2; d <= 2; ++d)
    for (std::size_t i = 0; i < comp(d).generators().size(); ++i) gens.push_back({d, i});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) pairs.emplace_back(a, b);

  if (!rep.parity_consistent) {
    rep.closure_ok = false;
    return out;
  }
  const std::size_t bad = first_failure(pairs.size(), exec, [&](std::size_t p) {
    const auto& ga = gens[pairs[p].first];
    const auto& gb = gens[pairs[p].second];
    const SuperMatrix br = superbracket(out.component(ga.degree).generators()[ga.index],
                                        out.component(gb.degree).generators()[gb.index]);
    const int target = ga.degree + gb.degree;
    if (target < -2 || target > 2) return !br.is_zero();
    return !out.component(target).contains(br);
  });
  rep.closure_ok = bad == pairs.size();
  return out;
}

GradingReport grading_analysis(const CaoSet& caos, Exec exec) { return analyze_grading(caos, exec).report; }

nlohmann::json to_json(const GradingReport& g) {
  return {{"dims", g.dims},
          {"length", g.length},
          {"closure_ok", g.closure_ok},
          {"parity_consistent", g.parity_consistent}};
}

GradingReport grading_from_json(const nlohmann::json& j) {
  GradingReport g;
  g.dims = j.at("dims").get<std::array<std::size_t, 5>>();
  g.length = j.at("length").get<int>();
  g.closure_ok = j.at("closure_ok").get<bool>();
  g.parity_consistent = j.at("parity_consistent").get<bool>();
  return g;
}

// --- super-Jacobi sampling ------------------------------------------------------

CheckReport superjacobi_sample(const GradingAnalysis& grading, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("superjacobi_sample needs count >= 1");
  std::vector<const SuperMatrix*> pool;
  for (const auto& c : grading.components)
    for (const auto& g : c.generators()) pool.push_back(&g);
  if (pool.empty()) throw std::invalid_argument("no graded generators to sample");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < count; ++s) {
    const std::size_t ia = pick(rng);
    const std::size_t ib = pick(rng);
    const std::size_t ic = pick(rng);
    const SuperMatrix& a = *pool[ia];
    const SuperMatrix& b = *pool[ib];
    const SuperMatrix& c = *pool[ic];
    const SuperMatrix lhs = superbracket(a, superbracket(b, c));
    const int sign = degree(a) * degree(b) == 1 ? -1 : 1;
    const SuperMatrix rhs = superbracket(superbracket(a, b), c) + RadElement(sign) * superbracket(b, superbracket(a, c));
    if (!(lhs == rhs)) {
      return {"superjacobi",
              false,
              nlohmann::json{{"sample", s}, {"pool_indices", {ia, ib, ic}}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}},
              "super-Jacobi identity violated"};
    }
  }
  return {"superjacobi", true, std::nullopt,
          std::to_string(count) + " sampled triples satisfy super-Jacobi (seed " + std::to_string(seed) + ")"};
}

CheckReport superjacobi_sample(const CaoSet& caos, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("superjacobi_sample needs count >= 1");
  return superjacobi_sample(analyze_grading(caos), seed, count);
}

}  // namespace wqo
