#pragma once

// Creation/annihilation operator families of the basic classical Lie
// superalgebras, realized in their defining representations. Every family
// here consists of odd generators only.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wqo/supermatrix.hpp"

namespace wqo {

enum class Family {
  SL3,    // sl(m|n), Z-grading of length 3
  SL5A,   // sl(m|n), length 5, split index 1 <= l < m on k
  SL5B,   // sl(m|n), length 5, split index 1 <= l < n on r
  OSPB,   // osp(2m+1|2n)
  OSPD1,  // osp(2m|2n), G0 = sl(n) + so(2m) (+ centre)
  OSPD2,  // osp(2m|2n), G0 = sl(m) + sp(2n) (+ centre)
};

inline constexpr Family kAllFamilies[] = {Family::SL3,  Family::SL5A,  Family::SL5B,
                                          Family::OSPB, Family::OSPD1, Family::OSPD2};

/// CLI spelling: sl3, sl5a, sl5b, ospB, ospD1, ospD2.
std::string family_name(Family f);
Family parse_family(const std::string& name);

struct FamilyParams {
  int m = 0;
  int n = 0;
  std::optional<int> l;

  bool operator==(const FamilyParams&) const = default;
  auto operator<=>(const FamilyParams&) const = default;
};

/// Throws std::invalid_argument naming the violated constraint (rank
/// range, l range, or the vanishing scaling factor).
void validate_params(Family f, const FamilyParams& p);

/// Sign function on orthosymplectic column labels: +1, -1 or 0.
int angle_sign(int j);

struct CaoLabel {
  int r = 0;
  int k = 0;
  bool operator==(const CaoLabel&) const = default;
};

struct CaoPair {
  CaoLabel label;
  SuperMatrix plus;
  SuperMatrix minus;
};

struct CaoSet {
  Family family{};
  FamilyParams params;
  GradedDim dim;
  std::vector<CaoPair> pairs;

  std::size_t size() const { return pairs.size(); }
  /// Position of a label in pairs; throws std::out_of_range if absent.
  std::size_t index_of(const CaoLabel& label) const;
};

/// Expected pair count M for a family.
std::size_t expected_pair_count(Family f, const FamilyParams& p);

CaoSet build_sl3(int m, int n);
CaoSet build_sl5a(int m, int n, int l);
CaoSet build_sl5b(int m, int n, int l);
CaoSet build_ospB(int m, int n);
CaoSet build_ospD1(int m, int n);
CaoSet build_ospD2(int m, int n);
CaoSet build(Family f, const FamilyParams& p);

struct ParaBosePair {
  SuperMatrix plus;
  SuperMatrix minus;
};

/// b+_r = sqrt(2) x+_{r0}, b-_r = -sqrt(2) x-_{r0} from an osp(1|2n) set.
std::vector<ParaBosePair> parabose_ops(const CaoSet& caos);

nlohmann::json to_json(const FamilyParams& p);
FamilyParams params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CaoSet& caos);

}  // namespace wqo
