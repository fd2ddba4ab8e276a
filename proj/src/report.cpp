#include "wqo/report.hpp"

#include "wqo/physics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wqo {

namespace {

std::string pair_name(const std::string& algebra, int a, int b) {
  return algebra + "(" + std::to_string(a) + "|" + std::to_string(b) + ")";
}

bool is_sl(Family f) { return f == Family::SL3 || f == Family::SL5A || f == Family::SL5B; }

}  // namespace

std::string algebra_name(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::SL3:
    case Family::SL5A:
    case Family::SL5B:
      return pair_name("sl", p.m, p.n);
    case Family::OSPB:
      return pair_name("osp", 2 * p.m + 1, 2 * p.n);
    case Family::OSPD1:
    case Family::OSPD2:
      if (p.m == 1) return "C(" + std::to_string(p.n + 1) + ")";
      return pair_name("osp", 2 * p.m, 2 * p.n);
  }
  return "?";
}

std::optional<std::string> iso_partner_name(Family f, const FamilyParams& p) {
  if (!is_sl(f) || p.m == p.n) return std::nullopt;
  return pair_name("sl", p.n, p.m);
}

bool SolutionRecord::accepted() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) {
    const bool informational =
        std::find(kInformationalChecks.begin(), kInformationalChecks.end(), kv.first) != kInformationalChecks.end();
    return informational || kv.second;
  });
}

// --- enumeration ------------------------------------------------------------------

std::vector<CandidateKey> solution_candidates(int N, int D, int max_rank) {
  if (N < 1 || D < 1) throw std::invalid_argument("N and D must be >= 1");
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  const long ND = static_cast<long>(N) * D;
  std::vector<CandidateKey> out;
  for (auto f : kAllFamilies) {
    const int m_lo = f == Family::OSPB ? 0 : 1;
    for (int m = m_lo; m <= max_rank; ++m) {
      for (int n = 1; n <= max_rank; ++n) {
        const FamilyParams base{m, n, {}};
        if (static_cast<long>(expected_pair_count(f, base)) != ND) continue;
        if (is_sl(f) && m == n) continue;
        if (f == Family::SL3 || !is_sl(f)) {
          out.push_back({f, base});
          continue;
        }
        const int l_max = f == Family::SL5A ? m - 1 : n - 1;
        for (int l = 1; l <= l_max; ++l) {
          const FamilyParams p{m, n, l};
          try {
            validate_params(f, p);
          } catch (const std::invalid_argument&) {
            continue;
          }
          out.push_back({f, p});
        }
      }
    }
  }
  return out;
}

VerifiedRecord verify_family(Family f, const FamilyParams& p, int N, int D, const RecordOptions& opts) {
  const CaoSet caos = build(f, p);
  const int M = static_cast<int>(caos.size());
  if (N < 1 || D < 1 || N * D != M)
    throw std::invalid_argument("N*D = " + std::to_string(N * D) + " does not match M = " + std::to_string(M));

  VerifiedRecord out;
  SolutionRecord& rec = out.record;
  auto record = [&](const std::string& key, CheckReport report) {
    rec.checks[key] = report.passed;
    report.check_name = key;
    out.reports.push_back(std::move(report));
  };

  rec.family = f;
  rec.params = p;
  rec.algebra_name = algebra_name(f, p);
  rec.M = M;
  rec.N = N;
  rec.D = D;
  rec.iso_partner = iso_partner_name(f, p);

  const CcResult cc = cc_scalar(caos, opts.exec);
  rec.lambda = cc.lambda.to_string();
  rec.mu = cc.mu;
  rec.c = cc.c.to_string();
  record("cc_scalar", cc.report);
  const RadElement closed = expected_lambda(f, p);
  const bool matches = cc.lambda == closed;
  record("cc_closed_form",
         {"", matches, matches ? std::nullopt : std::optional<nlohmann::json>({{"closed_form", closed.to_string()}}),
          "closed form " + closed.to_string() + ", computed " + cc.lambda.to_string()});
  record("cc_usable", {"", cc.usable,
                       cc.usable ? std::nullopt : std::optional<nlohmann::json>({{"lambda", cc.lambda.to_string()}}),
                       cc.usable ? "mu = " + std::to_string(cc.mu) + ", c = " + cc.c.to_string() + "; " +
                                       cc.interchange_note
                                 : "c = |lambda| must be positive"});

  if (f == Family::SL3) record("triple_relations", check_sl_triple(caos, opts.exec));
  if (f == Family::OSPB || f == Family::OSPD1 || f == Family::OSPD2)
    record("triple_relations", check_osp_triple(caos, opts.exec));
  if (f == Family::OSPB && p.m == 0) record("parabose", check_parabose(parabose_ops(caos), opts.exec));

  const GradingAnalysis grading = analyze_grading(caos, opts.exec);
  rec.grading = grading.report;
  std::string dims;
  for (auto d : grading.report.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  const std::string gdetails = "dims (" + dims + "), length " + std::to_string(grading.report.length);
  record("grading_closure", {"", grading.report.closure_ok,
                             grading.report.closure_ok ? std::nullopt : std::optional<nlohmann::json>(to_json(grading.report)),
                             gdetails});
  record("parity_consistent",
         {"", grading.report.parity_consistent,
          grading.report.parity_consistent ? std::nullopt : std::optional<nlohmann::json>(to_json(grading.report)),
          gdetails});
  record("superjacobi", superjacobi_sample(grading, opts.seed, opts.jacobi_samples));

  // Informational only.
  record("dagger_defining", dagger_report(caos));
  return out;
}

SolutionRecord make_record(Family f, const FamilyParams& p, int N, int D, const RecordOptions& opts) {
  return verify_family(f, p, N, D, opts).record;
}

Catalog enumerate_solutions(int N, int D, int max_rank, Exec exec) {
  const auto keys = solution_candidates(N, D, max_rank);
  Catalog cat;
  cat.N = N;
  cat.D = D;
  cat.max_rank = max_rank;
  // Outer parallelism over records; the kernels inside run serially.
  RecordOptions opts;
  opts.exec = Exec::serial;
  cat.records = generate_indexed<SolutionRecord>(keys.size(), exec, [&](std::size_t i) {
    return make_record(keys[i].family, keys[i].params, N, D, opts);
  });
  return cat;
}

// --- JSON --------------------------------------------------------------------------

nlohmann::json to_json(const SolutionRecord& r) {
  return {{"family", family_name(r.family)},
          {"params", to_json(r.params)},
          {"algebra_name", r.algebra_name},
          {"M", r.M},
          {"N", r.N},
          {"D", r.D},
          {"lambda", r.lambda},
          {"mu", r.mu},
          {"c", r.c},
          {"grading", to_json(r.grading)},
          {"checks", r.checks},
          {"iso_partner", r.iso_partner ? nlohmann::json(*r.iso_partner) : nlohmann::json(nullptr)}};
}

SolutionRecord record_from_json(const nlohmann::json& j) {
  SolutionRecord r;
  r.family = parse_family(j.at("family").get<std::string>());
  r.params = params_from_json(j.at("params"));
  r.algebra_name = j.at("algebra_name").get<std::string>();
  r.M = j.at("M").get<int>();
  r.N = j.at("N").get<int>();
  r.D = j.at("D").get<int>();
  r.lambda = j.at("lambda").get<std::string>();
  r.mu = j.at("mu").get<int>();
  r.c = j.at("c").get<std::string>();
  r.grading = grading_from_json(j.at("grading"));
  r.checks = j.at("checks").get<std::map<std::string, bool>>();
  if (j.contains("iso_partner") && !j.at("iso_partner").is_null()) r.iso_partner = j.at("iso_partner").get<std::string>();
  return r;
}

nlohmann::json to_json(const Catalog& c) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : c.records) records.push_back(to_json(r));
  return {{"N", c.N}, {"D", c.D}, {"max_rank", c.max_rank}, {"tool_version", c.tool_version}, {"records", records}};
}

Catalog catalog_from_json(const nlohmann::json& j) {
  Catalog c;
  c.N = j.at("N").get<int>();
  c.D = j.at("D").get<int>();
  c.max_rank = j.at("max_rank").get<int>();
  c.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& r : j.at("records")) c.records.push_back(record_from_json(r));
  return c;
}

// --- text -------------------------------------------------------------------------

std::string to_text(const SolutionRecord& r) {
  std::ostringstream os;
  os << family_name(r.family) << " m=" << r.params.m << " n=" << r.params.n;
  if (r.params.l) os << " l=" << *r.params.l;
  os << "  " << r.algebra_name;
  if ((r.family == Family::OSPD1 || r.family == Family::OSPD2) && r.params.m == 1)
    os << " = osp(2|" << 2 * r.params.n << ")";
  os << "  M=" << r.M << " (N=" << r.N << ", D=" << r.D << ")\n";
  os << "  lambda = " << r.lambda << "  mu = " << (r.mu > 0 ? "+1" : "-1") << "  c = " << r.c << "\n";
  os << "  grading dims (G-2..G+2) =";
  for (auto d : r.grading.dims) os << ' ' << d;
  os << "  length " << r.grading.length << "\n";
  if (r.iso_partner) os << "  isomorphic presentation: " << *r.iso_partner << "\n";
  os << "  CC usable: " << (r.checks.count("cc_usable") && r.checks.at("cc_usable") ? "true" : "false") << "\n";
  for (const auto& [name, ok] : r.checks) {
    const bool informational =
        std::find(kInformationalChecks.begin(), kInformationalChecks.end(), name) != kInformationalChecks.end();
    os << "  " << (ok ? "[pass] " : (informational ? "[info] " : "[FAIL] ")) << name << "\n";
  }
  return os.str();
}

std::string to_text(const Catalog& c) {
  std::ostringstream os;
  os << "solutions for N=" << c.N << ", D=" << c.D << " (max rank " << c.max_rank << "): " << c.records.size()
     << " records\n";
  for (const auto& r : c.records) os << to_text(r);
  return os.str();
}

}  // namespace wqo
