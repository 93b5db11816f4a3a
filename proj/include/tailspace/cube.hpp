#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tailspace/dyadic.hpp"
#include "tailspace/error.hpp"

namespace tailspace {

using Index = std::int64_t;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exhaustive (2^n-point) operations are capped here; larger n is rejected
/// rather than thrashing.
inline constexpr int kMaxDimension = 24;

/// Point convention, fixed repo-wide: bit i of the point index j is set iff
/// coordinate x_{i+1} = -1 (so index 0 is the all-(+1) point), and the
/// character indexed by the subset mask S is W_S(j) = (-1)^{popcount(j & S)}.
inline constexpr const char* kPointConvention = "bit_i_set_means_x_{i+1}_eq_minus1";

inline int popcount32(std::uint32_t x) { return std::popcount(x); }

/// Asserted value range of a function on the cube.
enum class ValueKind { PlusMinusOne, ZeroOne, Ternary, Real };

std::string to_string(ValueKind k);          // "pm1" | "01" | "pm01" | "real"
ValueKind value_kind_from_string(const std::string& s);
bool value_in_kind(double v, ValueKind k);   // exact membership test

/// A real-valued function on {-1,1}^n stored densely over the 2^n points.
/// Immutable after construction; Boolean-tagged instances hold their values
/// exactly (all of +-1, 0, 1 are exact doubles), which is what makes the
/// exact integer paths below possible.
class CubeFunction {
 public:
  CubeFunction(int n, Eigen::VectorXd values, ValueKind kind = ValueKind::Real);

  static CubeFunction constant(int n, double c);
  /// W_S as a +-1 function, S given as a subset bitmask.
  static CubeFunction character(int n, std::uint32_t subset_mask);
  /// x_{i+1} for bit index i in [0, n).
  static CubeFunction dictator(int n, int bit = 0);

  int dimension() const { return n_; }
  Index size() const { return Index(1) << n_; }
  ValueKind kind() const { return kind_; }
  bool is_boolean() const { return kind_ != ValueKind::Real; }

  const Eigen::VectorXd& values() const { return values_; }
  double operator()(Index j) const { return values_(j); }

  /// Same values, reinterpreted under a (validated) range tag.
  CubeFunction retagged(ValueKind kind) const { return CubeFunction(n_, values_, kind); }

 private:
  int n_;
  Eigen::VectorXd values_;
  ValueKind kind_;
};

/// Fourier coefficients f_hat(S) indexed by the subset bitmask S.
class FourierSpectrum {
 public:
  FourierSpectrum(int n, Eigen::VectorXd coeffs);

  int dimension() const { return n_; }
  Index size() const { return Index(1) << n_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  double operator()(std::uint32_t subset_mask) const { return coeffs_(subset_mask); }

  /// Sum of squared coefficients with |S| = d, for d = 0..n.
  std::vector<double> degree_profile() const;

 private:
  int n_;
  Eigen::VectorXd coeffs_;
};

/// In-place unnormalized Walsh-Hadamard butterfly: v[S] <- sum_j v[j] W_S(j).
/// O(n 2^n) additions; an involution up to the factor 2^n.  Works over any
/// ring scalar; int64 instantiations stay exact for Boolean inputs up to
/// n = kMaxDimension (values bounded by 2^n < 2^63).
template <typename Scalar>
void fwht_inplace(Vector<Scalar>& v) {
  const Index size = v.size();
  for (Index half = 1; half < size; half <<= 1) {
    for (Index base = 0; base < size; base += half << 1) {
      for (Index j = base; j < base + half; ++j) {
        const Scalar a = v(j);
        const Scalar b = v(j + half);
        v(j) = a + b;
        v(j + half) = a - b;
      }
    }
  }
}

FourierSpectrum fwht(const CubeFunction& f);
CubeFunction inverse_fwht(const FourierSpectrum& s, ValueKind kind = ValueKind::Real);

/// (E |f|^p)^{1/p} for p >= 1; p = +infinity returns max |f|.
double lp_norm(const CubeFunction& f, double p);
double lp_norm(const Eigen::VectorXd& values, double p);  // uniform measure

double mean(const CubeFunction& f);

/// Fourier multiplier e^{-t|S|}; heat(f, 0) == f exactly.
CubeFunction heat(const CubeFunction& f, double t);
/// Fourier multiplier |S| (the number operator).
CubeFunction laplacian(const CubeFunction& f);
/// D_i f(x) = [f(x) - f(x with coordinate i flipped)] / 2, coordinates 1-based.
CubeFunction discrete_derivative(const CubeFunction& f, int i);

/// Exact values derived from a Boolean-tagged function.
Vector<std::int64_t> integer_values(const CubeFunction& f);
/// Exact 2^n * f_hat(S) for Boolean-tagged f.
Vector<std::int64_t> integer_spectrum(const CubeFunction& f);
/// Exact mean for Boolean-tagged f.
Dyadic mean_dyadic(const CubeFunction& f);
/// Exact P[f = v] for Boolean-tagged f.
Dyadic probability_equal(const CubeFunction& f, double v);

/// P[f(x) != f(x with coordinate i flipped)], exact; +-1-valued f only.
Dyadic pivotal_probability(const CubeFunction& f, int i);
Dyadic max_pivotal_probability(const CubeFunction& f);
/// Resampling influence of coordinate i: half the pivotal probability.
Dyadic influence(const CubeFunction& f, int i);
/// Sum of pivotal probabilities; equals sum_S |S| f_hat(S)^2.
Dyadic total_influence(const CubeFunction& f);

/// Membership certificate for the tail spaces.  Forbidden coefficients are
/// 1 <= |S| <= k, plus S = {} when include_constant is set (the L^{>k} /
/// L+^{>k} distinction).  Boolean-tagged functions are certified in exact
/// integer arithmetic; real-valued ones get a floating max violation.
struct TailCertificate {
  int k = 0;
  bool include_constant = false;
  bool exact = false;
  double max_violation = 0.0;   // largest |f_hat(S)| over forbidden S
  Dyadic max_violation_exact;   // meaningful iff exact
  bool member = false;          // exact: violation identically zero

  static constexpr double kFloatTol = 1e-12;
};

TailCertificate tail_certificate(const CubeFunction& f, int k, bool include_constant);

/// Largest k with f in L+^{>k} (include_constant = false) or L^{>k}; -1 when
/// none (for L^{>k} this means a nonzero mean or level-1 coefficient).
int achieved_tail_level(const CubeFunction& f, bool include_constant);

}  // namespace tailspace
