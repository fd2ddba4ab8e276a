#pragma once

// Solution records, the (N, D) solution catalog and their JSON form.

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqo/cao.hpp"
#include "wqo/exec.hpp"
#include "wqo/verifier.hpp"

#ifndef WQO_VERSION
#define WQO_VERSION "dev"
#endif

namespace wqo {

inline const std::string kToolVersion = std::string("wqo ") + WQO_VERSION;

/// Checks whose failure does not disqualify a record.
inline const std::vector<std::string> kInformationalChecks = {"dagger_defining"};

/// "sl(m|n)", "osp(2m+1|2n)", "osp(2m|2n)", or "C(n+1)" for osp(2|2n).
std::string algebra_name(Family f, const FamilyParams& p);

/// Name of the sl(n|m) presentation for SL families with m != n.
std::optional<std::string> iso_partner_name(Family f, const FamilyParams& p);

struct SolutionRecord {
  Family family{};
  FamilyParams params;
  std::string algebra_name;
  int M = 0;
  int N = 0;
  int D = 0;
  std::string lambda;
  int mu = 1;
  std::string c;
  GradingReport grading;
  std::map<std::string, bool> checks;
  std::optional<std::string> iso_partner;

  /// All non-informational checks passed.
  bool accepted() const;
  bool operator==(const SolutionRecord&) const = default;
};

struct Catalog {
  int N = 0;
  int D = 0;
  int max_rank = 0;
  std::vector<SolutionRecord> records;
  std::string tool_version = kToolVersion;

  bool operator==(const Catalog&) const = default;
};

struct CandidateKey {
  Family family{};
  FamilyParams params;
  bool operator==(const CandidateKey&) const = default;
};

/// Every (family, m, n, l) with m, n <= max_rank whose pair count equals
/// N*D and which yields a usable compatibility scalar, ordered by
/// (family, m, n, l).
std::vector<CandidateKey> solution_candidates(int N, int D, int max_rank);

struct RecordOptions {
  std::uint64_t seed = 1;
  int jacobi_samples = 100;
  Exec exec = Exec::parallel;
};

struct VerifiedRecord {
  SolutionRecord record;
  std::vector<CheckReport> reports;  // one per entry of record.checks
};

/// Builds the CAO set and runs every applicable check.
VerifiedRecord verify_family(Family f, const FamilyParams& p, int N, int D, const RecordOptions& opts = {});
SolutionRecord make_record(Family f, const FamilyParams& p, int N, int D, const RecordOptions& opts = {});

/// Records are generated concurrently and assembled in candidate order.
Catalog enumerate_solutions(int N, int D, int max_rank, Exec exec = Exec::parallel);

nlohmann::json to_json(const SolutionRecord& r);
SolutionRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Catalog& c);
Catalog catalog_from_json(const nlohmann::json& j);

std::string to_text(const SolutionRecord& r);
std::string to_text(const Catalog& c);

}  // namespace wqo
