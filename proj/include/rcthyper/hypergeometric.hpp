#pragma once

#include <string_view>
#include <vector>

#include "rcthyper/params.hpp"

namespace rcthyper {

/// Parameters (a, b, c) of F(a,b;c;x); all finite and positive.
class HypParams {
 public:
  HypParams(double a, double b, double c);

  /// Zero-balanced parameters (a, b, a+b).
  static HypParams zero_balanced(const Params& p) { return {p.a(), p.b(), p.a() + p.b()}; }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

 private:
  double a_;
  double b_;
  double c_;
};

enum class Method { direct_series, log_connection, terminal_limit };

std::string_view to_string(Method m);

struct EvalResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  Method method = Method::direct_series;
  /// False when the term cap was reached before the stopping rule fired;
  /// value is then the best partial sum and abs_err_estimate covers the tail.
  bool converged = true;
  long terms = 0;
};

/// Argument of F near x = 1 carried together with its complement, so that
/// 1 - x is known to full relative precision even when x rounds to 1.
struct UnitArg {
  double x;
  double one_minus_x;

  static UnitArg from_x(double x);
  static UnitArg from_complement(double one_minus_x);
};

struct SeriesOptions {
  double tol = 1e-15;
  long max_terms = 100000;

  /// Defaults, with max_terms taken from RCT_HYPER_MAX_TERMS when set.
  static SeriesOptions from_environment();
};

/// Arguments above this use the expansion about x = 1 where one exists.
inline constexpr double kSwitchPoint = 0.75;

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1. Overflows to inf.
double pochhammer(double a, long n);

/// Power-series coefficients (a)_n (b)_n / ((c)_n n!) of F(a,b;c;x),
/// generated by the term-ratio recurrence. All positive for positive
/// parameters.
class SeriesCoefficients {
 public:
  explicit SeriesCoefficients(const HypParams& p) : p_(p) {}

  const HypParams& params() const noexcept { return p_; }

  /// t_{n+1}/t_n at unit argument.
  double ratio(long n) const;

  /// Coefficients for n = 0..n_max.
  std::vector<double> sequence(long n_max) const;

  /// A_n: coefficients of F(a,b;a+b;x).
  static std::vector<double> a_n(const Params& p, long n_max);
  /// A*_n: coefficients of F(1/3,2/3;1;x).
  static std::vector<double> a_star_n(long n_max);
  /// B_n: coefficients of F(a,b;a+b+1;x).
  static std::vector<double> b_n(const Params& p, long n_max);
  /// B*_n: coefficients of F(1/3,2/3;2;x).
  static std::vector<double> b_star_n(long n_max);

 private:
  HypParams p_;
};

/// Gauss hypergeometric function F(a,b;c;x) for x in [0,1).
///
/// x <= 0.75 is summed directly. Above the switch point, parameters with
/// c-a-b a non-negative integer use the logarithmic expansion in powers of
/// 1-x; c-a-b < 0 is reduced by Euler's transformation; other c-a-b > 0
/// fall back to the direct series (or the Gauss value F(1) once 1-x is
/// too small to matter). Throws DomainError for x outside [0,1).
EvalResult hyp2f1(const HypParams& p, double x, const SeriesOptions& opt = SeriesOptions::from_environment());
EvalResult hyp2f1(const HypParams& p, UnitArg x, const SeriesOptions& opt = SeriesOptions::from_environment());

/// The power series summed term by term with compensated accumulation.
EvalResult hyp2f1_direct_series(const HypParams& p, double x, const SeriesOptions& opt = {});

/// Expansion about x = 1 for c = a + b + m, m a non-negative integer.
/// Throws DomainError if c-a-b is not (numerically) such an integer.
EvalResult hyp2f1_log_connection(const HypParams& p, UnitArg x, const SeriesOptions& opt = {});

/// dF/dx = (ab/c) F(a+1,b+1;c+1;x).
EvalResult hyp2f1_derivative(const HypParams& p, double x, const SeriesOptions& opt = SeriesOptions::from_environment());
EvalResult hyp2f1_derivative(const HypParams& p, UnitArg x, const SeriesOptions& opt = SeriesOptions::from_environment());

/// Relative residual of (1-x) F(a+1,b+1;a+b+1;x) = F(a,b;a+b+1;x).
double contiguous_check(const Params& p, double x);

/// Two-term approximation (R(a,b) - ln(1-r)) / B(a,b) of F(a,b;a+b;r) for
/// r in (0.9, 1).
double zero_balanced_asymptotic(const Params& p, double r);

/// Shorthands used throughout: F = F(a,b;a+b;.), G = F(a,b;a+b+1;.), and
/// the starred versions with (a,b) = (1/3,2/3).
double zb_f(const Params& p, UnitArg x);
double zb_g(const Params& p, UnitArg x);
double f_star(UnitArg x);
double g_star(UnitArg x);

}  // namespace rcthyper
