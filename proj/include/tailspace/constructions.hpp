#pragma once

#include <map>
#include <string>
#include <vector>

#include "tailspace/codes.hpp"
#include "tailspace/cube.hpp"

namespace tailspace {

/// One exact assertion attached to a construction: `achieved relation bound`
/// compared in dyadic arithmetic, no tolerance.
struct Claim {
  std::string id;
  std::string relation;  // "==", "<=" or ">="
  Dyadic achieved;
  Dyadic bound;
  bool holds = false;
};

Claim make_claim(const std::string& id, const std::string& relation,
                 const Dyadic& achieved, const Dyadic& bound);

struct ConstructionRecord {
  CubeFunction function;
  std::map<std::string, std::string> parameters;
  std::vector<Claim> claims;

  bool all_hold() const;
  const Claim& claim(const std::string& id) const;
};

/// (1 + f)/2 for +-1-valued f, and back.
CubeFunction to_zero_one(const CubeFunction& f);
CubeFunction to_plus_minus_one(const CubeFunction& f);

/// Ben-Or--Linial tribes: OR of b ANDs over disjoint blocks of width r,
/// with 1 = TRUE.  Block 1 occupies coordinates 1..r (lowest index bits).
CubeFunction tribes(int b, int r);

/// +1 exactly when all r+1 inputs agree; equals the repetition-code
/// indicator, sits in L+^{>1} with P[=1] = 2^{-r}.
CubeFunction alleq(int r);

/// OR of b copies of g on disjoint blocks.  The record certifies, exactly:
///   mean_formula:  E f == 2(1 - (1 - P(g=1))^b) - 1
///   pivotal_bound: max_i pivotal(f, i) <= 2 P(g=1)
ConstructionRecord or_compose(const CubeFunction& g, int b);

enum class ChooseBMode {
  LastNonpositive,  // largest b with E f_b <= 0
  MinAbsMean,       // b minimizing |E f_b|
};

/// Block count selection for the OR composition, exact scan over b.
/// Requires 0 < p1 <= 2^{-m}.
int choose_b(const Dyadic& p1, int m, ChooseBMode mode);

/// f = outer(g_1(block 1), ..., g_b(block b)) on disjoint blocks (widths may
/// differ; block i occupies the next dim(g_i) coordinates).  outer consumes
/// TRUE/FALSE positions: its input coordinate i is +1 iff g_i = 1.  All g_i
/// must share a value convention ({0,1} or {-1,1}); if every g_i is in
/// L+^{>k}, so is f.
CubeFunction block_compose(const CubeFunction& outer,
                           const std::vector<CubeFunction>& blocks);

/// Sum of t 2^d pairwise-disjoint coset shifts of the {0,1} indicator of
/// `code` (which must satisfy P[=1] = 2^{-n_target-d} and lie in
/// L+^{>n_target}): a {0,1} function with E h = t / 2^{n_target}, exactly,
/// still in L+^{>n_target}.
CubeFunction mean_adjust(int n_target, long long t, const LinearCode& code,
                         std::uint64_t seed);

/// g(x, y) = (f(x) - f(y))/2 on doubled variables: {-1,0,1}-valued, mean 0
/// exactly; f in L+^{>k} implies g in L^{>k}.
CubeFunction zero_mean_difference(const CubeFunction& f);

/// The Coding Tribes function: OR of b code-indicator blocks with
/// P[g = 1] = 2^{-m}, tail level > m per block, b chosen to nearly balance
/// the mean.  Record claims: mean_formula, pivotal_bound, mean_magnitude
/// (|E f| <= 2^{1-m}), tail_level (>= m).
ConstructionRecord coding_tribes(int m, std::uint64_t seed);

/// The balanced construction G(x,y) = f(x) - 2 1_{g0=1}(x) h(y), with
/// f = g0 OR g1 OR ... OR gb, P[gi=1] = 2^{-m}, P[g0=1] = 4 2^{-m}, and h
/// adjusting the mean to zero.  Exact claims: zero_mean, tail_level (>= m),
/// x/y pivotal bounds.  The product term uses the {0,1} indicator of g0,
/// which is the only reading keeping G +-1-valued.
ConstructionRecord balanced_coding_tribes(int m, std::uint64_t seed);

/// Single-block witness that Harper's inequality admits no tail-space gain:
/// f = 1_{g=1} for a code indicator g with P[g=1] <= 2^{-m}.  Exact claims:
/// mean (== P), sum_pivotal_bound (<= 2 n P, which is the ratio bound
/// gamma_rec = 2n / log2(1/E f) in exact form), tail_level.
ConstructionRecord harper_witness(int m, std::uint64_t seed, double delta = 0.5);
/// Same record with g = indicator(code) for an explicitly supplied code.
ConstructionRecord harper_witness_from_code(const LinearCode& code);

}  // namespace tailspace
