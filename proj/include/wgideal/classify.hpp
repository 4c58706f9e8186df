#pragma once

#include <string>
#include <vector>

#include "wgideal/coxeter.hpp"
#include "wgideal/ideal.hpp"

namespace wgideal {

// Rank-2 harness. In I2(m) with S = {s, t} (indices 0, 1), every left ideal
// other than W is I_{h,k} = {[..st]_l : l <= h} ∪ {[..ts]_l : l <= k} with
// h, k < m, where [..xy]_l is the alternating word of length l ending in y.

enum class Rank2Mode { Ideal, Biideal };

/// The element [..st]_l (ending_in = 1) or [..ts]_l (ending_in = 0).
ElemId alternating_element(const CoxeterSystem& sys, int ending_in, int l);

struct Rank2Shape {
  bool whole = false;
  int h = 0;  // longest [..st] in the ideal
  int k = 0;  // longest [..ts] in the ideal
};
Rank2Shape rank2_shape(const CoxeterSystem& sys, const std::vector<ElemId>& ideal);

/// Closed-form answers; `why` receives a short description of the matching
/// family when the answer is yes.
bool predicted_ideal(int m, const Rank2Shape& shape, GenSet J, std::string* why = nullptr);
bool predicted_biideal(int m, const Rank2Shape& shape, GenSet J, GenSet K, std::string* why = nullptr);

struct Rank2Row {
  std::vector<ElemId> ideal;
  Rank2Shape shape;
  GenSet J;
  GenSet K;
  bool accepted = false;   // computed
  bool predicted = false;  // closed form
  std::string family;
};

struct Rank2Table {
  int m = 0;
  Rank2Mode mode = Rank2Mode::Ideal;
  SystemPtr sys;
  std::vector<Rank2Row> rows;  // every candidate, in a fixed order
  std::vector<int> mismatches;  // rows where accepted != predicted
  bool agrees() const { return mismatches.empty(); }
};

/// Every left ideal (two-sided for biideals) with every J (and K), verified
/// concurrently.
Rank2Table classify_rank2(int m, Rank2Mode mode);

/// For a verified (I_{h,k}, ∅): T_w c_1 = c_w + sum_{l(x) < l(w)} q^{l(w)-l(x)} c_x
/// for every w in I with l(w) <= min(h, k) + 1.
bool uniform_expansion_holds(const IdealContext& ctx);

namespace serial {
Rank2Table classify_rank2(int m, Rank2Mode mode);
}

}  // namespace wgideal
