#include "tailspace/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace tailspace {

namespace {
// Shortest representation that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}
}  // namespace

Claim make_claim(const std::string& id, const std::string& relation,
                 const Dyadic& achieved, const Dyadic& bound) {
  Claim c{id, relation, achieved, bound, false};
  if (relation == "==") c.holds = (achieved == bound);
  else if (relation == "<=") c.holds = (achieved <= bound);
  else if (relation == ">=") c.holds = (achieved >= bound);
  else fail("internal", "unknown claim relation " + relation);
  return c;
}

bool ConstructionRecord::all_hold() const {
  for (const Claim& c : claims) {
    if (!c.holds) return false;
  }
  return true;
}

const Claim& ConstructionRecord::claim(const std::string& id) const {
  for (const Claim& c : claims) {
    if (c.id == id) return c;
  }
  fail("internal", "no claim named " + id);
}

CubeFunction to_zero_one(const CubeFunction& f) {
  require(f.kind() == ValueKind::PlusMinusOne, "not-boolean",
          "to_zero_one expects a +-1-valued function");
  Eigen::VectorXd v = (f.values().array() + 1.0) / 2.0;
  return CubeFunction(f.dimension(), std::move(v), ValueKind::ZeroOne);
}

CubeFunction to_plus_minus_one(const CubeFunction& f) {
  require(f.kind() == ValueKind::ZeroOne, "not-boolean",
          "to_plus_minus_one expects a {0,1}-valued function");
  Eigen::VectorXd v = 2.0 * f.values().array() - 1.0;
  return CubeFunction(f.dimension(), std::move(v), ValueKind::PlusMinusOne);
}

CubeFunction tribes(int b, int r) {
  require(b >= 1 && r >= 1, "bad-parameter", "tribes needs b, r >= 1");
  require(b * r <= kMaxDimension, "capacity", "tribes exceeds 24 bits");
  const int n = b * r;
  const Index block_mask = (Index(1) << r) - 1;
  Eigen::VectorXd v(Index(1) << n);
  for (Index j = 0; j < v.size(); ++j) {
    double val = -1.0;
    for (int d = 0; d < b; ++d) {
      if (((j >> (d * r)) & block_mask) == 0) {  // all-ones block: AND is TRUE
        val = 1.0;
        break;
      }
    }
    v(j) = val;
  }
  return CubeFunction(n, std::move(v), ValueKind::PlusMinusOne);
}

CubeFunction alleq(int r) {
  require(r >= 1 && r + 1 <= kMaxDimension, "capacity", "alleq exceeds 24 bits");
  return indicator(repetition_code(r + 1));
}

ConstructionRecord or_compose(const CubeFunction& g, int b) {
  require(g.kind() == ValueKind::PlusMinusOne, "not-boolean",
          "or_compose expects a +-1-valued block function");
  require(b >= 1, "bad-parameter", "or_compose needs b >= 1");
  const int r = g.dimension();
  require(b * r <= kMaxDimension, "capacity", "or_compose exceeds 24 bits");
  const int n = b * r;
  const Index block_mask = (Index(1) << r) - 1;
  Eigen::VectorXd v(Index(1) << n);
  for (Index j = 0; j < v.size(); ++j) {
    double val = -1.0;
    for (int d = 0; d < b; ++d) {
      if (g((j >> (d * r)) & block_mask) == 1.0) {
        val = 1.0;
        break;
      }
    }
    v(j) = val;
  }
  CubeFunction f(n, std::move(v), ValueKind::PlusMinusOne);

  const Dyadic p1 = probability_equal(g, 1.0);
  const Dyadic formula =
      Dyadic(1) - Dyadic(2) * (Dyadic(1) - p1).pow(static_cast<unsigned>(b));

  ConstructionRecord rec{std::move(f), {}, {}};
  rec.parameters["b"] = std::to_string(b);
  rec.parameters["r"] = std::to_string(r);
  rec.parameters["n"] = std::to_string(n);
  rec.parameters["p1"] = p1.to_string();
  rec.claims.push_back(make_claim("mean_formula", "==", mean_dyadic(rec.function), formula));
  rec.claims.push_back(make_claim("pivotal_bound", "<=",
                                  max_pivotal_probability(rec.function), Dyadic(2) * p1));
  return rec;
}

int choose_b(const Dyadic& p1, int m, ChooseBMode mode) {
  require(m >= 1, "bad-parameter", "choose_b needs m >= 1");
  require(p1 > Dyadic(0) && p1 <= Dyadic::one_over_pow2(m), "bad-parameter",
          "choose_b needs 0 < p1 <= 2^-m");
  const Dyadic q = Dyadic(1) - p1;
  const Dyadic half = Dyadic::ratio(1, 1);
  constexpr int kScanCap = 1 << 17;
  // E f_b = 1 - 2 (1-p1)^b is increasing in b; E f_b <= 0 iff (1-p1)^b >= 1/2.
  Dyadic power = q;  // (1-p1)^b
  int b = 1;
  Dyadic prev = power;
  while (power >= half) {
    require(b < kScanCap, "search-exhausted", "choose_b scan exceeded cap");
    prev = power;
    power *= q;
    ++b;
  }
  // b is now the smallest block count with positive mean; prev = (1-p1)^{b-1}.
  if (mode == ChooseBMode::LastNonpositive) return b - 1;
  const Dyadic abs_at_prev = Dyadic(2) * prev - Dyadic(1);   // |E f_{b-1}|
  const Dyadic abs_at_b = Dyadic(1) - Dyadic(2) * power;     // |E f_b|
  return (abs_at_prev <= abs_at_b) ? b - 1 : b;
}

CubeFunction block_compose(const CubeFunction& outer,
                           const std::vector<CubeFunction>& blocks) {
  require(outer.is_boolean(), "not-boolean", "outer combiner must be Boolean");
  require(!blocks.empty(), "bad-parameter", "block_compose needs blocks");
  require(outer.dimension() == static_cast<int>(blocks.size()), "dimension-mismatch",
          "outer arity must match the block count");
  const ValueKind conv = blocks.front().kind();
  require(conv == ValueKind::PlusMinusOne || conv == ValueKind::ZeroOne,
          "mixed-conventions", "blocks must be {0,1}- or {-1,1}-valued");
  int total = 0;
  for (const CubeFunction& blk : blocks) {
    require(blk.kind() == conv, "mixed-conventions",
            "blocks must share one value convention");
    total += blk.dimension();
  }
  require(total <= kMaxDimension, "capacity", "block_compose exceeds 24 bits");

  Eigen::VectorXd v(Index(1) << total);
  for (Index j = 0; j < v.size(); ++j) {
    Index outer_idx = 0;
    int offset = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const CubeFunction& blk = blocks[i];
      const Index mask = (Index(1) << blk.dimension()) - 1;
      const double val = blk((j >> offset) & mask);
      if (val != 1.0) outer_idx |= Index(1) << i;  // FALSE input: coordinate -1
      offset += blk.dimension();
    }
    v(j) = outer(outer_idx);
  }
  return CubeFunction(total, std::move(v), outer.kind());
}

CubeFunction mean_adjust(int n_target, long long t, const LinearCode& code,
                         std::uint64_t seed) {
  require(n_target >= 0 && n_target <= code.length(), "bad-parameter",
          "mean_adjust target level outside [0, length]");
  require(t >= 0 && t < (1LL << n_target), "bad-parameter",
          "mean_adjust needs 0 <= t < 2^n_target");
  const int n = code.length();
  const int d = n - code.dimension() - n_target;
  require(d >= 0, "bad-parameter",
          "base indicator probability 2^" + std::to_string(code.dimension() - n) +
              " exceeds 2^-" + std::to_string(n_target));
  require(macwilliams_tail(code, n_target), "tail-failure",
          "base indicator is not in L+^{>" + std::to_string(n_target) + "}");

  const long long needed = t << d;
  const LinearCode dual_code = dual(code);
  const auto syndrome = [&dual_code](Word w) {
    Word s = 0;
    for (std::size_t i = 0; i < dual_code.rows().size(); ++i) {
      s |= static_cast<Word>(parity(w & dual_code.rows()[i])) << i;
    }
    return s;
  };

  const CubeFunction base = indicator01(code);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(Index(1) << n);
  std::vector<char> used(std::size_t(1) << (n_target + d), 0);
  Rng rng(seed);
  const Index points = Index(1) << n;
  const Word offset = static_cast<Word>(rng.next()) & static_cast<Word>(points - 1);
  long long found = 0;
  for (Index step = 0; step < points && found < needed; ++step) {
    const Word w = (offset + static_cast<Word>(step)) & static_cast<Word>(points - 1);
    const Word s = syndrome(w);
    if (used[s]) continue;
    used[s] = 1;
    ++found;
    for (Index j = 0; j < points; ++j) h(j) += base(j ^ Index(w));
  }
  require(found == needed, "insufficient-cosets",
          "could not find " + std::to_string(needed) + " disjoint cosets");
  // The {0,1} tag doubles as the disjointness check: overlapping cosets
  // would produce a value of 2.
  return CubeFunction(n, std::move(h), ValueKind::ZeroOne);
}

CubeFunction zero_mean_difference(const CubeFunction& f) {
  require(f.kind() == ValueKind::PlusMinusOne, "not-boolean",
          "zero_mean_difference expects a +-1-valued function");
  const int n = f.dimension();
  require(2 * n <= kMaxDimension, "capacity", "doubled variables exceed 24 bits");
  Eigen::VectorXd v(Index(1) << (2 * n));
  const Index size = Index(1) << n;
  for (Index jy = 0; jy < size; ++jy) {
    for (Index jx = 0; jx < size; ++jx) {
      v(jx | (jy << n)) = (f(jx) - f(jy)) / 2.0;
    }
  }
  return CubeFunction(2 * n, std::move(v), ValueKind::Ternary);
}

ConstructionRecord coding_tribes(int m, std::uint64_t seed) {
  require(m >= 1 && m <= 8, "bad-parameter", "coding_tribes needs m in [1, 8]");
  Rng rng(seed);
  const LinearCode code = tail_code_search(m, m, rng.next());
  const CubeFunction g = indicator(code);
  const Dyadic p1 = probability_equal(g, 1.0);
  const int b = choose_b(p1, m, ChooseBMode::MinAbsMean);
  require(b * code.length() <= kMaxDimension, "capacity",
          "coding tribes at m=" + std::to_string(m) + " needs " +
              std::to_string(b * code.length()) + " bits");
  ConstructionRecord rec = or_compose(g, b);
  rec.parameters["m"] = std::to_string(m);
  rec.parameters["seed"] = std::to_string(seed);
  rec.parameters["code_length"] = std::to_string(code.length());
  rec.parameters["code_dimension"] = std::to_string(code.dimension());
  rec.claims.push_back(make_claim("mean_magnitude", "<=",
                                  mean_dyadic(rec.function).abs(),
                                  Dyadic::one_over_pow2(m - 1)));
  rec.claims.push_back(
      make_claim("tail_level", ">=",
                 achieved_tail_level(rec.function, /*include_constant=*/false),
                 Dyadic(m)));
  return rec;
}

ConstructionRecord balanced_coding_tribes(int m, std::uint64_t seed) {
  require(m >= 3, "bad-parameter",
          "balanced construction needs m >= 3 (P[g0=1] = 2^{2-m} < 1)");
  Rng rng(seed);
  const LinearCode block_code = tail_code_search(m, m, rng.next());
  const LinearCode g0_code = tail_code_search(m - 2, m, rng.next());
  const CubeFunction g = indicator(block_code);
  const CubeFunction g0 = indicator(g0_code);
  const Dyadic p = probability_equal(g, 1.0);     // 2^-m
  const Dyadic p0 = probability_equal(g0, 1.0);   // 4 * 2^-m

  // Smallest b >= 1 with E f = 1 - 2 (1-p0) (1-p)^b > 0.
  const Dyadic q = Dyadic(1) - p;
  Dyadic damp = (Dyadic(1) - p0) * q;  // (1-p0)(1-p)^b
  int b = 1;
  while (!(Dyadic(1) - Dyadic(2) * damp > Dyadic(0))) {
    damp *= q;
    ++b;
    require(b <= kMaxDimension, "capacity", "mean never turns positive in capacity");
  }
  const int r0 = g0_code.length();
  const int r = block_code.length();
  const int nx = r0 + b * r;
  require(nx < kMaxDimension, "capacity",
          "x-side of the balanced construction needs " + std::to_string(nx) +
              " bits plus an h-domain");

  std::vector<CubeFunction> blocks;
  blocks.push_back(g0);
  for (int i = 0; i < b; ++i) blocks.push_back(g);
  const CubeFunction f = block_compose(tribes(b + 1, 1), blocks);
  const Dyadic mean_f = mean_dyadic(f);
  require(mean_f == Dyadic(1) - Dyadic(2) * damp, "internal",
          "exhaustive mean disagrees with the product formula");

  // 2 E h = E f / P[g0 = 1], i.e. E h = E f * 2^{m-3}; its normalized dyadic
  // form is t / 2^{n_target}.
  const Dyadic mean_h = mean_f * Dyadic(BigInt(1) << (m - 3));
  require(mean_h > Dyadic(0) && mean_h < Dyadic(1), "internal",
          "h mean outside (0,1)");
  const int n_target = mean_h.exponent();
  const long long t = mean_h.numerator().convert_to<long long>();
  const LinearCode h_code = tail_code_search(
      n_target, std::max(m, n_target), rng.next(), kMaxDimension - nx);
  const CubeFunction h = mean_adjust(n_target, t, h_code, rng.next());
  const int nh = h_code.length();
  const int n = nx + nh;

  const Index g0_mask = (Index(1) << r0) - 1;
  Eigen::VectorXd values(Index(1) << n);
  for (Index jy = 0; jy < (Index(1) << nh); ++jy) {
    const double hy = h(jy);
    for (Index jx = 0; jx < (Index(1) << nx); ++jx) {
      const double g0_on = (g0(jx & g0_mask) == 1.0) ? 1.0 : 0.0;
      values(jx | (jy << nx)) = f(jx) - 2.0 * g0_on * hy;
    }
  }
  // The +-1 tag is the range claim: construction fails loudly if G ever
  // leaves {-1, 1}.
  CubeFunction G(n, std::move(values), ValueKind::PlusMinusOne);

  ConstructionRecord rec{std::move(G), {}, {}};
  rec.parameters["m"] = std::to_string(m);
  rec.parameters["seed"] = std::to_string(seed);
  rec.parameters["b"] = std::to_string(b);
  rec.parameters["r0"] = std::to_string(r0);
  rec.parameters["r"] = std::to_string(r);
  rec.parameters["nx"] = std::to_string(nx);
  rec.parameters["nh"] = std::to_string(nh);
  rec.parameters["n"] = std::to_string(n);
  rec.parameters["t"] = std::to_string(t);
  rec.parameters["n_target"] = std::to_string(n_target);
  rec.parameters["mean_f"] = mean_f.to_string();
  rec.parameters["p_block"] = p.to_string();
  rec.parameters["p_g0"] = p0.to_string();

  rec.claims.push_back(make_claim("range_pm1", "==", 1, 1));
  rec.claims.push_back(make_claim("zero_mean", "==", mean_dyadic(rec.function), 0));
  rec.claims.push_back(
      make_claim("tail_level", ">=",
                 achieved_tail_level(rec.function, /*include_constant=*/true),
                 Dyadic(m)));

  Dyadic max_piv_x = 0, max_piv_y = 0;
  for (int i = 1; i <= nx; ++i) {
    max_piv_x = std::max(max_piv_x, pivotal_probability(rec.function, i));
  }
  for (int i = nx + 1; i <= n; ++i) {
    max_piv_y = std::max(max_piv_y, pivotal_probability(rec.function, i));
  }
  rec.claims.push_back(make_claim("x_pivotal_bound", "<=", max_piv_x, Dyadic(2) * p0));
  // Flipping a y coordinate matters exactly when the g0 block fires, so the
  // y-side influence factorizes.
  rec.claims.push_back(make_claim(
      "y_pivotal", "==", max_piv_y,
      p0 * max_pivotal_probability(to_plus_minus_one(h))));

  const Dyadic max_piv = std::max(max_piv_x, max_piv_y);
  rec.parameters["max_pivotal"] = max_piv.to_string();
  const double c_achieved =
      max_piv.to_double() * static_cast<double>(n) / std::log(static_cast<double>(n));
  rec.parameters["influence_constant"] = format_double(c_achieved);
  return rec;
}

namespace {
ConstructionRecord harper_witness_impl(const LinearCode& code,
                                       std::map<std::string, std::string> params) {
  require(code.dimension() < code.length(), "degenerate",
          "full-space indicator has mean 1");
  const CubeFunction g = indicator(code);
  const CubeFunction f = to_zero_one(g);
  const int n = code.length();
  const int m_eff = n - code.dimension();  // E f = 2^-m_eff
  const Dyadic mean_f = mean_dyadic(f);

  const std::optional<int> dual_weight = min_weight(dual(code));
  const int tail_k = dual_weight.has_value() ? *dual_weight - 1 : n;

  Dyadic sum_pivotal = 0;
  for (int i = 1; i <= n; ++i) sum_pivotal += pivotal_probability(g, i);

  ConstructionRecord rec{f, std::move(params), {}};
  rec.parameters["length"] = std::to_string(n);
  rec.parameters["dimension"] = std::to_string(code.dimension());
  rec.parameters["m_eff"] = std::to_string(m_eff);
  const double ef = mean_f.to_double();
  const double ratio_log2 = sum_pivotal.to_double() / (ef * m_eff);
  rec.parameters["ratio_log2"] = format_double(ratio_log2);
  rec.parameters["ratio_ln"] = format_double(ratio_log2 / std::log(2.0));
  rec.parameters["gamma_recorded"] =
      format_double(2.0 * n / static_cast<double>(m_eff));

  rec.claims.push_back(
      make_claim("mean", "==", mean_f, Dyadic::one_over_pow2(m_eff)));
  // sum I_i <= 2 n P[g=1]; dividing by (E f) log2(1/E f) = P m_eff makes this
  // exactly the ratio bound gamma_recorded = 2n/m_eff.
  rec.claims.push_back(make_claim("sum_pivotal_bound", "<=", sum_pivotal,
                                  Dyadic(2 * n) * mean_f));
  rec.claims.push_back(make_claim(
      "tail_level", "==",
      achieved_tail_level(f, /*include_constant=*/false), Dyadic(tail_k)));
  return rec;
}
}  // namespace

ConstructionRecord harper_witness(int m, std::uint64_t seed, double delta) {
  require(m >= 1, "bad-parameter", "harper_witness needs m >= 1");
  require(delta > 0.0 && delta <= 0.5, "bad-parameter", "delta in (0, 1/2]");
  const double gamma = std::max(4.0, 1.0 / delta);
  const int mprime = static_cast<int>(std::ceil(gamma * m - 1e-12));
  require(mprime <= kMaxDimension, "capacity",
          "harper_witness needs length " + std::to_string(mprime));
  const LinearCode good = good_code_search(mprime, delta, seed);
  std::map<std::string, std::string> params;
  params["m"] = std::to_string(m);
  params["seed"] = std::to_string(seed);
  params["delta"] = format_double(delta);
  params["gamma"] = format_double(gamma);
  return harper_witness_impl(dual(good), std::move(params));
}

ConstructionRecord harper_witness_from_code(const LinearCode& code) {
  return harper_witness_impl(code, {});
}

}  // namespace tailspace
