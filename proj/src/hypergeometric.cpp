#include "rcthyper/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "rcthyper/compensated_sum.hpp"
#include "rcthyper/special_core.hpp"

namespace rcthyper {
namespace {

constexpr double kEps = 0x1p-53;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Consecutive small terms required before the series is declared converged.
constexpr int kSmallRun = 3;

bool is_valid_positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_unit_arg(UnitArg x) {
  if (!(x.x >= 0.0 && x.one_minus_x > 0.0 && x.one_minus_x <= 1.0 && std::isfinite(x.x))) {
    throw DomainError("hyp2f1: argument must lie in [0,1) (got x=" + std::to_string(x.x) +
                      ", 1-x=" + std::to_string(x.one_minus_x) + ")");
  }
}

// c - a - b snapped to an integer when it is one up to rounding.
bool integer_excess(const HypParams& p, long& m) {
  const double s = p.c() - p.a() - p.b();
  const double nearest = std::nearbyint(s);
  const double slack = 1e-12 * std::max({1.0, p.a(), p.b(), p.c()});
  if (std::fabs(s - nearest) <= slack && std::fabs(nearest) < 1e6) {
    m = static_cast<long>(nearest);
    return true;
  }
  return false;
}

// Relative error attached to exp(lgamma(...) +- ...) prefactors.
double prefactor_rel_err(std::initializer_list<double> args) {
  double mag = 1.0;
  for (double z : args) mag += std::fabs(log_gamma(z));
  return 8.0 * kEps * mag;
}

// F(1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)) for c-a-b > 0.
double gauss_sum(const HypParams& p) {
  const double s = p.c() - p.a() - p.b();
  return std::exp(log_gamma(p.c()) + log_gamma(s) - log_gamma(p.c() - p.a()) -
                  log_gamma(p.c() - p.b()));
}

EvalResult with_terminal_fallback(const HypParams& p, UnitArg x, const SeriesOptions& opt) {
  EvalResult direct = hyp2f1_direct_series(p, x.x, opt);
  if (direct.converged) return direct;

  // F(x) - F(1) is O(w^s) for s < 1 and O(w) for s > 1.
  const double s = p.c() - p.a() - p.b();
  const double w = x.one_minus_x;
  double correction = kInf;
  if (s < 1.0) {
    correction = std::exp(log_gamma(p.c()) + std::lgamma(-s) - log_gamma(p.a()) -
                          log_gamma(p.b())) *
                 std::pow(w, s);
  } else if (s > 1.0) {
    correction = p.a() * p.b() / p.c() *
                 std::exp(log_gamma(p.c() + 1.0) + log_gamma(s - 1.0) -
                          log_gamma(p.c() - p.a()) - log_gamma(p.c() - p.b())) *
                 w;
  }
  const double limit = gauss_sum(p);
  const double limit_err =
      correction + std::fabs(limit) * prefactor_rel_err({p.c(), s, p.c() - p.a(), p.c() - p.b()});
  if (limit_err < direct.abs_err_estimate) {
    return EvalResult{limit, limit_err, Method::terminal_limit, true, 0};
  }
  return direct;
}

}  // namespace

HypParams::HypParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(is_valid_positive(a) && is_valid_positive(b) && is_valid_positive(c))) {
    throw DomainError("HypParams: a, b, c must be finite and positive (got a=" +
                      std::to_string(a) + ", b=" + std::to_string(b) +
                      ", c=" + std::to_string(c) + ")");
  }
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::direct_series:
      return "direct_series";
    case Method::log_connection:
      return "log_connection";
    case Method::terminal_limit:
      return "terminal_limit";
  }
  return "unknown";
}

UnitArg UnitArg::from_x(double x) { return UnitArg{x, 1.0 - x}; }

UnitArg UnitArg::from_complement(double one_minus_x) {
  return UnitArg{1.0 - one_minus_x, one_minus_x};
}

SeriesOptions SeriesOptions::from_environment() {
  static const long cap = [] {
    const char* env = std::getenv("RCT_HYPER_MAX_TERMS");
    if (env == nullptr || *env == '\0') return SeriesOptions{}.max_terms;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) return SeriesOptions{}.max_terms;
    return v;
  }();
  SeriesOptions opt;
  opt.max_terms = cap;
  return opt;
}

double pochhammer(double a, long n) {
  if (n < 0) throw DomainError("pochhammer: n must be non-negative");
  double prod = 1.0;
  for (long k = 0; k < n; ++k) prod *= a + static_cast<double>(k);
  return prod;
}

double SeriesCoefficients::ratio(long n) const {
  const double k = static_cast<double>(n);
  return (p_.a() + k) * (p_.b() + k) / ((p_.c() + k) * (k + 1.0));
}

std::vector<double> SeriesCoefficients::sequence(long n_max) const {
  if (n_max < 0) throw DomainError("SeriesCoefficients: n_max must be non-negative");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  for (long n = 0; n < n_max; ++n) {
    out[static_cast<std::size_t>(n) + 1] = out[static_cast<std::size_t>(n)] * ratio(n);
  }
  return out;
}

std::vector<double> SeriesCoefficients::a_n(const Params& p, long n_max) {
  return SeriesCoefficients(HypParams::zero_balanced(p)).sequence(n_max);
}

std::vector<double> SeriesCoefficients::a_star_n(long n_max) {
  return SeriesCoefficients(HypParams(1.0 / 3.0, 2.0 / 3.0, 1.0)).sequence(n_max);
}

std::vector<double> SeriesCoefficients::b_n(const Params& p, long n_max) {
  return SeriesCoefficients(HypParams(p.a(), p.b(), p.a() + p.b() + 1.0)).sequence(n_max);
}

std::vector<double> SeriesCoefficients::b_star_n(long n_max) {
  return SeriesCoefficients(HypParams(1.0 / 3.0, 2.0 / 3.0, 2.0)).sequence(n_max);
}

EvalResult hyp2f1_direct_series(const HypParams& p, double x, const SeriesOptions& opt) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("hyp2f1: argument must lie in [0,1) (got " + std::to_string(x) + ")");
  }
  if (x == 0.0) return EvalResult{1.0, 0.0, Method::direct_series, true, 1};

  const SeriesCoefficients coef(p);
  CompensatedSum sum(1.0);
  double term = 1.0;
  int small = 0;
  long n = 0;
  bool converged = false;
  while (n < opt.max_terms) {
    term *= coef.ratio(n) * x;
    ++n;
    sum.add(term);
    if (std::fabs(term) <= opt.tol * std::fabs(sum.value())) {
      if (++small >= kSmallRun) {
        converged = true;
        break;
      }
    } else {
      small = 0;
    }
  }

  const double q = coef.ratio(n) * x;
  const double tail = q < 1.0 ? std::fabs(term) * q / (1.0 - q) : kInf;
  const double value = sum.value();
  return EvalResult{value, tail + sum.rounding_error(n), Method::direct_series, converged, n + 1};
}

EvalResult hyp2f1_log_connection(const HypParams& p, UnitArg x, const SeriesOptions& opt) {
  check_unit_arg(x);
  long m = 0;
  if (!integer_excess(p, m) || m < 0) {
    throw DomainError("hyp2f1_log_connection: c-a-b must be a non-negative integer");
  }
  const double a = p.a();
  const double b = p.b();
  const double c = p.c();
  const double w = x.one_minus_x;
  const double md = static_cast<double>(m);

  // Polynomial part: Gamma(c)/(Gamma(a+m)Gamma(b+m)) sum_{k<m} (a)_k(b)_k (m-k-1)!/k! (-w)^k.
  double finite = 0.0;
  double finite_mag = 0.0;
  if (m > 0) {
    CompensatedSum poly;
    double ab_k = 1.0;      // (a)_k (b)_k / k!
    double fact = std::tgamma(md);  // (m-k-1)!
    double wk = 1.0;        // (-w)^k
    for (long k = 0; k < m; ++k) {
      poly.add(ab_k * fact * wk);
      const double kd = static_cast<double>(k);
      ab_k *= (a + kd) * (b + kd) / (kd + 1.0);
      if (k + 1 < m) fact /= md - kd - 1.0;
      wk *= -w;
    }
    const double pref = std::exp(log_gamma(c) - log_gamma(a + md) - log_gamma(b + md));
    finite = pref * poly.value();
    finite_mag = pref * poly.magnitude();
  }

  // Logarithmic part:
  //   -(-w)^m Gamma(c)/(Gamma(a)Gamma(b)) sum_k d_k w^k
  //     * (ln w - psi(k+1) - psi(k+m+1) + psi(a+m+k) + psi(b+m+k)),
  //   d_k = (a+m)_k (b+m)_k / (k! (k+m)!).
  const double log_w = std::log(w);
  double d = 1.0 / std::tgamma(md + 1.0);
  double wk = 1.0;
  double psi_k1 = -kEulerGamma;
  double psi_km1 = -kEulerGamma;
  for (long j = 1; j <= m; ++j) psi_km1 += 1.0 / static_cast<double>(j);
  double psi_a = digamma(a + md);
  double psi_b = digamma(b + md);

  CompensatedSum sum;
  double term = 0.0;
  int small = 0;
  long k = 0;
  bool converged = false;
  while (k < opt.max_terms) {
    term = d * wk * (log_w - psi_k1 - psi_km1 + psi_a + psi_b);
    sum.add(term);
    if (std::fabs(term) <= opt.tol * std::fabs(sum.value()) && k > 0) {
      if (++small >= kSmallRun) {
        converged = true;
        ++k;
        break;
      }
    } else {
      small = 0;
    }
    const double kd = static_cast<double>(k);
    d *= (a + md + kd) * (b + md + kd) / ((kd + 1.0) * (kd + md + 1.0));
    wk *= w;
    psi_k1 += 1.0 / (kd + 1.0);
    psi_km1 += 1.0 / (kd + md + 1.0);
    psi_a += 1.0 / (a + md + kd);
    psi_b += 1.0 / (b + md + kd);
    ++k;
  }

  const double sign = (m % 2 == 0) ? -1.0 : 1.0;
  const double pref = sign * std::exp(log_gamma(c) - log_gamma(a) - log_gamma(b)) * std::pow(w, md);
  const double value = finite + pref * sum.value();

  const double q = w;  // asymptotic term ratio
  const double tail = q < 1.0 ? std::fabs(term) * q / (1.0 - q) : kInf;
  const double pref_err = prefactor_rel_err({c, a, b});
  const double err = std::fabs(pref) * (tail + sum.rounding_error(k) + 16.0 * kEps * sum.magnitude()) +
                     4.0 * kEps * finite_mag + pref_err * (std::fabs(finite) + std::fabs(pref * sum.value()));
  return EvalResult{value, err, Method::log_connection, converged, k};
}

EvalResult hyp2f1(const HypParams& p, double x, const SeriesOptions& opt) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("hyp2f1: argument must lie in [0,1) (got " + std::to_string(x) + ")");
  }
  return hyp2f1(p, UnitArg::from_x(x), opt);
}

EvalResult hyp2f1(const HypParams& p, UnitArg x, const SeriesOptions& opt) {
  check_unit_arg(x);
  if (x.x <= kSwitchPoint) return hyp2f1_direct_series(p, x.x, opt);

  long m = 0;
  const double s = p.c() - p.a() - p.b();
  if (integer_excess(p, m) && m >= 0) return hyp2f1_log_connection(p, x, opt);

  if (s < 0.0) {
    // Euler: F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x).
    if (p.c() > p.a() && p.c() > p.b()) {
      EvalResult inner = hyp2f1(HypParams(p.c() - p.a(), p.c() - p.b(), p.c()), x, opt);
      const double scale = std::pow(x.one_minus_x, s);
      const double scale_err = 4.0 * kEps * (1.0 + std::fabs(s * std::log(x.one_minus_x)));
      inner.value *= scale;
      inner.abs_err_estimate = inner.abs_err_estimate * scale + std::fabs(inner.value) * scale_err;
      return inner;
    }
    if (x.x >= 1.0) throw DomainError("hyp2f1: argument rounds to 1 and no expansion applies");
    return hyp2f1_direct_series(p, x.x, opt);
  }

  if (x.x >= 1.0) {
    // Only the Gauss limit is meaningful once 1-x is below double resolution.
    const double limit = gauss_sum(p);
    return EvalResult{limit, std::fabs(limit) * 1e-14, Method::terminal_limit, true, 0};
  }
  return with_terminal_fallback(p, x, opt);
}

EvalResult hyp2f1_derivative(const HypParams& p, double x, const SeriesOptions& opt) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("hyp2f1_derivative: argument must lie in [0,1) (got " + std::to_string(x) + ")");
  }
  return hyp2f1_derivative(p, UnitArg::from_x(x), opt);
}

EvalResult hyp2f1_derivative(const HypParams& p, UnitArg x, const SeriesOptions& opt) {
  const double scale = p.a() * p.b() / p.c();
  EvalResult r = hyp2f1(HypParams(p.a() + 1.0, p.b() + 1.0, p.c() + 1.0), x, opt);
  r.value *= scale;
  r.abs_err_estimate = r.abs_err_estimate * scale + 2.0 * kEps * std::fabs(r.value);
  return r;
}

double contiguous_check(const Params& p, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("contiguous_check: x must lie in (0,1) (got " + std::to_string(x) + ")");
  }
  const double a = p.a();
  const double b = p.b();
  const UnitArg u = UnitArg::from_x(x);
  // Summed directly where practical so both sides come from different routes.
  const HypParams shifted_params(a + 1.0, b + 1.0, a + b + 1.0);
  const double shifted = x <= 0.99 ? hyp2f1_direct_series(shifted_params, x).value
                                   : hyp2f1(shifted_params, u).value;
  const double g = hyp2f1(HypParams(a, b, a + b + 1.0), u).value;
  return std::fabs(u.one_minus_x * shifted - g) / std::fabs(g);
}

double zero_balanced_asymptotic(const Params& p, double r) {
  if (!(r > 0.9 && r < 1.0)) {
    throw DomainError("zero_balanced_asymptotic: r must lie in (0.9,1) (got " + std::to_string(r) + ")");
  }
  return (r_constant(p) - std::log(1.0 - r)) / beta(p);
}

double zb_f(const Params& p, UnitArg x) { return hyp2f1(HypParams::zero_balanced(p), x).value; }

double zb_g(const Params& p, UnitArg x) {
  return hyp2f1(HypParams(p.a(), p.b(), p.a() + p.b() + 1.0), x).value;
}

double f_star(UnitArg x) { return hyp2f1(HypParams(1.0 / 3.0, 2.0 / 3.0, 1.0), x).value; }

double g_star(UnitArg x) { return hyp2f1(HypParams(1.0 / 3.0, 2.0 / 3.0, 2.0), x).value; }

}  // namespace rcthyper
