#include "tailspace/cube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tailspace {

std::string to_string(ValueKind k) {
  switch (k) {
    case ValueKind::PlusMinusOne: return "pm1";
    case ValueKind::ZeroOne: return "01";
    case ValueKind::Ternary: return "pm01";
    case ValueKind::Real: return "real";
  }
  fail("internal", "unknown value kind");
}

ValueKind value_kind_from_string(const std::string& s) {
  if (s == "pm1") return ValueKind::PlusMinusOne;
  if (s == "01") return ValueKind::ZeroOne;
  if (s == "pm01") return ValueKind::Ternary;
  if (s == "real") return ValueKind::Real;
  fail("bad-kind", "unknown value kind '" + s + "'");
}

bool value_in_kind(double v, ValueKind k) {
  switch (k) {
    case ValueKind::PlusMinusOne: return v == 1.0 || v == -1.0;
    case ValueKind::ZeroOne: return v == 0.0 || v == 1.0;
    case ValueKind::Ternary: return v == -1.0 || v == 0.0 || v == 1.0;
    case ValueKind::Real: return std::isfinite(v);
  }
  return false;
}

CubeFunction::CubeFunction(int n, Eigen::VectorXd values, ValueKind kind)
    : n_(n), values_(std::move(values)), kind_(kind) {
  require(n >= 0 && n <= kMaxDimension, "capacity",
          "dimension " + std::to_string(n) + " outside [0, " +
              std::to_string(kMaxDimension) + "]");
  require(values_.size() == (Index(1) << n_), "bad-size",
          "expected 2^" + std::to_string(n_) + " values, got " +
              std::to_string(values_.size()));
  for (Index j = 0; j < values_.size(); ++j) {
    require(value_in_kind(values_(j), kind_), "range-violation",
            "value " + std::to_string(values_(j)) + " at point " +
                std::to_string(j) + " not in tagged range " + to_string(kind_));
  }
}

CubeFunction CubeFunction::constant(int n, double c) {
  Eigen::VectorXd v = Eigen::VectorXd::Constant(Index(1) << n, c);
  ValueKind k = ValueKind::Real;
  if (c == 1.0 || c == -1.0) k = ValueKind::PlusMinusOne;
  else if (c == 0.0) k = ValueKind::ZeroOne;
  return CubeFunction(n, std::move(v), k);
}

CubeFunction CubeFunction::character(int n, std::uint32_t subset_mask) {
  require(n <= kMaxDimension, "capacity", "character dimension too large");
  require((subset_mask >> n) == 0, "bad-subset", "subset mask exceeds dimension");
  Eigen::VectorXd v(Index(1) << n);
  for (Index j = 0; j < v.size(); ++j) {
    v(j) = (popcount32(static_cast<std::uint32_t>(j) & subset_mask) & 1) ? -1.0 : 1.0;
  }
  return CubeFunction(n, std::move(v), ValueKind::PlusMinusOne);
}

CubeFunction CubeFunction::dictator(int n, int bit) {
  require(bit >= 0 && bit < n, "bad-coordinate", "dictator bit out of range");
  return character(n, std::uint32_t(1) << bit);
}

FourierSpectrum::FourierSpectrum(int n, Eigen::VectorXd coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  require(n >= 0 && n <= kMaxDimension, "capacity", "spectrum dimension too large");
  require(coeffs_.size() == (Index(1) << n_), "bad-size", "spectrum size mismatch");
}

std::vector<double> FourierSpectrum::degree_profile() const {
  std::vector<double> w(static_cast<std::size_t>(n_) + 1, 0.0);
  for (Index s = 0; s < coeffs_.size(); ++s) {
    w[static_cast<std::size_t>(popcount32(static_cast<std::uint32_t>(s)))] +=
        coeffs_(s) * coeffs_(s);
  }
  return w;
}

FourierSpectrum fwht(const CubeFunction& f) {
  Eigen::VectorXd c = f.values();
  fwht_inplace(c);
  c *= std::ldexp(1.0, -f.dimension());
  return FourierSpectrum(f.dimension(), std::move(c));
}

CubeFunction inverse_fwht(const FourierSpectrum& s, ValueKind kind) {
  Eigen::VectorXd v = s.coeffs();
  fwht_inplace(v);
  return CubeFunction(s.dimension(), std::move(v), kind);
}

double lp_norm(const Eigen::VectorXd& values, double p) {
  require(p >= 1.0, "bad-exponent", "lp_norm requires p >= 1");
  if (std::isinf(p)) return values.cwiseAbs().maxCoeff();
  const double n = static_cast<double>(values.size());
  double acc = 0.0;
  for (Index j = 0; j < values.size(); ++j) acc += std::pow(std::abs(values(j)), p);
  return std::pow(acc / n, 1.0 / p);
}

double lp_norm(const CubeFunction& f, double p) { return lp_norm(f.values(), p); }

double mean(const CubeFunction& f) {
  return f.values().mean();
}

CubeFunction heat(const CubeFunction& f, double t) {
  require(t >= 0.0, "bad-time", "heat requires t >= 0");
  if (t == 0.0) return f;
  Eigen::VectorXd c = f.values();
  fwht_inplace(c);
  for (Index s = 0; s < c.size(); ++s) {
    c(s) *= std::exp(-t * popcount32(static_cast<std::uint32_t>(s)));
  }
  fwht_inplace(c);
  c *= std::ldexp(1.0, -f.dimension());
  return CubeFunction(f.dimension(), std::move(c), ValueKind::Real);
}

CubeFunction laplacian(const CubeFunction& f) {
  Eigen::VectorXd c = f.values();
  fwht_inplace(c);
  for (Index s = 0; s < c.size(); ++s) {
    c(s) *= popcount32(static_cast<std::uint32_t>(s));
  }
  fwht_inplace(c);
  c *= std::ldexp(1.0, -f.dimension());
  return CubeFunction(f.dimension(), std::move(c), ValueKind::Real);
}

CubeFunction discrete_derivative(const CubeFunction& f, int i) {
  require(i >= 1 && i <= f.dimension(), "bad-coordinate",
          "derivative coordinate " + std::to_string(i) + " outside [1, n]");
  const Index bit = Index(1) << (i - 1);
  Eigen::VectorXd v(f.size());
  for (Index j = 0; j < v.size(); ++j) v(j) = (f(j) - f(j ^ bit)) / 2.0;
  const ValueKind kind =
      f.kind() == ValueKind::PlusMinusOne ? ValueKind::Ternary : ValueKind::Real;
  return CubeFunction(f.dimension(), std::move(v), kind);
}

Vector<std::int64_t> integer_values(const CubeFunction& f) {
  require(f.is_boolean(), "not-boolean",
          "exact arithmetic requires a Boolean-tagged function");
  Vector<std::int64_t> v(f.size());
  for (Index j = 0; j < v.size(); ++j) v(j) = std::llround(f(j));
  return v;
}

Vector<std::int64_t> integer_spectrum(const CubeFunction& f) {
  Vector<std::int64_t> v = integer_values(f);
  fwht_inplace(v);
  return v;
}

Dyadic mean_dyadic(const CubeFunction& f) {
  const Vector<std::int64_t> v = integer_values(f);
  long long sum = 0;
  for (Index j = 0; j < v.size(); ++j) sum += v(j);
  return Dyadic::ratio(sum, f.dimension());
}

Dyadic probability_equal(const CubeFunction& f, double v) {
  require(f.is_boolean(), "not-boolean", "exact probability requires a Boolean tag");
  long long count = 0;
  for (Index j = 0; j < f.size(); ++j) count += (f(j) == v) ? 1 : 0;
  return Dyadic::ratio(count, f.dimension());
}

namespace {
long long flip_disagreements(const CubeFunction& f, int i) {
  require(f.kind() == ValueKind::PlusMinusOne, "not-boolean",
          "influence is defined for +-1-valued functions");
  require(i >= 1 && i <= f.dimension(), "bad-coordinate",
          "influence coordinate out of range");
  const Index bit = Index(1) << (i - 1);
  long long count = 0;
  for (Index j = 0; j < f.size(); ++j) count += (f(j) != f(j ^ bit)) ? 1 : 0;
  return count;
}
}  // namespace

Dyadic pivotal_probability(const CubeFunction& f, int i) {
  return Dyadic::ratio(flip_disagreements(f, i), f.dimension());
}

Dyadic max_pivotal_probability(const CubeFunction& f) {
  Dyadic best = 0;
  for (int i = 1; i <= f.dimension(); ++i) {
    Dyadic p = pivotal_probability(f, i);
    if (p > best) best = p;
  }
  return best;
}

Dyadic influence(const CubeFunction& f, int i) {
  return Dyadic::ratio(flip_disagreements(f, i), f.dimension() + 1);
}

Dyadic total_influence(const CubeFunction& f) {
  long long total = 0;
  for (int i = 1; i <= f.dimension(); ++i) total += flip_disagreements(f, i);
  return Dyadic::ratio(total, f.dimension());
}

TailCertificate tail_certificate(const CubeFunction& f, int k, bool include_constant) {
  require(k >= 0 && k <= f.dimension(), "bad-level", "tail level outside [0, n]");
  TailCertificate cert;
  cert.k = k;
  cert.include_constant = include_constant;
  const auto forbidden = [&](std::uint32_t s) {
    const int deg = popcount32(s);
    if (s == 0) return include_constant;
    return deg <= k;
  };
  if (f.is_boolean()) {
    cert.exact = true;
    const Vector<std::int64_t> c = integer_spectrum(f);
    long long worst = 0;
    for (Index s = 0; s < c.size(); ++s) {
      if (!forbidden(static_cast<std::uint32_t>(s))) continue;
      worst = std::max<long long>(worst, std::abs(c(s)));
    }
    cert.max_violation_exact = Dyadic::ratio(worst, f.dimension());
    cert.max_violation = cert.max_violation_exact.to_double();
    cert.member = (worst == 0);
  } else {
    cert.exact = false;
    const FourierSpectrum spec = fwht(f);
    double worst = 0.0;
    for (Index s = 0; s < spec.size(); ++s) {
      if (!forbidden(static_cast<std::uint32_t>(s))) continue;
      worst = std::max(worst, std::abs(spec.coeffs()(s)));
    }
    cert.max_violation = worst;
    cert.member = (worst <= TailCertificate::kFloatTol);
  }
  return cert;
}

int achieved_tail_level(const CubeFunction& f, bool include_constant) {
  if (f.is_boolean()) {
    const Vector<std::int64_t> c = integer_spectrum(f);
    if (include_constant && c(0) != 0) return -1;
    int min_deg = f.dimension() + 1;
    for (Index s = 1; s < c.size(); ++s) {
      if (c(s) != 0) {
        min_deg = std::min(min_deg, popcount32(static_cast<std::uint32_t>(s)));
      }
    }
    return min_deg - 1;
  }
  const FourierSpectrum spec = fwht(f);
  if (include_constant && std::abs(spec.coeffs()(0)) > TailCertificate::kFloatTol) {
    return -1;
  }
  int min_deg = f.dimension() + 1;
  for (Index s = 1; s < spec.size(); ++s) {
    if (std::abs(spec.coeffs()(s)) > TailCertificate::kFloatTol) {
      min_deg = std::min(min_deg, popcount32(static_cast<std::uint32_t>(s)));
    }
  }
  return min_deg - 1;
}

std::optional<Dyadic> Dyadic::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Dyadic(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) return std::nullopt;
    int pow2 = 0;
    while ((den & 1) == 0) {
      den >>= 1;
      ++pow2;
    }
    if (den != 1) return std::nullopt;
    return Dyadic::ratio(std::move(num), pow2);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace tailspace
