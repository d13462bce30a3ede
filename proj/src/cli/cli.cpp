#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcthyper/hypergeometric.hpp"
#include "rcthyper/inequality_lab.hpp"
#include "rcthyper/rct_transforms.hpp"
#include "rcthyper/regions.hpp"

namespace rcthyper::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, json, csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json json_real(double v) {
  if (std::isfinite(v)) return v;
  return fmt_real(v);
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError(std::string(flag) + ": expected lo:hi, got '" + text + "'");
  }
  Range r;
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    r.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    r.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": could not parse '" + text + "'");
  }
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo > 0.0 && r.hi >= r.lo)) {
    throw UsageError(std::string(flag) + ": need 0 < lo <= hi");
  }
  return r;
}

std::vector<double> range_points(const Range& r, int n) {
  if (r.lo == r.hi || n == 1) return {r.lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = i == n - 1 ? r.hi : r.lo + (r.hi - r.lo) * i / (n - 1);
  }
  return out;
}

std::vector<double> open_unit_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) g[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) / (n + 1);
  return g;
}

struct Common {
  std::string format;
  std::string out_path;
  double tol = kMarginTol;
  int threads = 0;
};

Format resolve_format(const std::string& requested, Format fallback) {
  if (requested.empty()) return fallback;
  if (requested == "plain") return Format::plain;
  if (requested == "json") return Format::json;
  if (requested == "csv") return Format::csv;
  throw UsageError("--format must be json, csv or plain");
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  double a = 0, b = 0, c = 0, x = 0;
};

int cmd_eval(const EvalArgs& args, Format fmt, std::ostream& out) {
  const HypParams p(args.a, args.b, args.c);
  const EvalResult r = hyp2f1(p, args.x);
  switch (fmt) {
    case Format::plain:
      out << "value " << fmt_real(r.value) << '\n'
          << "abs_err_estimate " << fmt_real(r.abs_err_estimate) << '\n'
          << "method " << to_string(r.method) << '\n'
          << "converged " << (r.converged ? "true" : "false") << '\n';
      break;
    case Format::json: {
      json j;
      j["value"] = json_real(r.value);
      j["abs_err_estimate"] = json_real(r.abs_err_estimate);
      j["method"] = std::string(to_string(r.method));
      j["converged"] = r.converged;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "value,abs_err_estimate,method,converged\n"
          << fmt_real(r.value) << ',' << fmt_real(r.abs_err_estimate) << ',' << to_string(r.method)
          << ',' << (r.converged ? "true" : "false") << '\n';
      break;
  }
  return r.converged ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------- verify

struct VerifyCase {
  std::function<double(double)> residual;
  double contract;
};

const std::map<std::string, VerifyCase>& verify_cases() {
  static const std::map<std::string, VerifyCase> cases = {
      {"rct1", {rct1_residual, 1e-10}},
      {"rct2", {rct2_residual, 1e-10}},
      {"landen1", {[](double r) { return landen_residual(r, 1); }, 1e-10}},
      {"landen2", {[](double r) { return landen_residual(r, 2); }, 1e-10}},
      {"drct", {differentiated_rct_residual, 1e-9}},
  };
  return cases;
}

int cmd_verify(const std::string& name, int n, Format fmt, std::ostream& out) {
  const auto it = verify_cases().find(name);
  if (it == verify_cases().end()) {
    throw UsageError("verify: unknown identity '" + name + "' (rct1, rct2, landen1, landen2, drct)");
  }
  if (n < 2) throw UsageError("verify: --n must be at least 2");
  double worst = 0.0;
  double worst_r = 0.0;
  for (double r : open_unit_grid(n)) {
    const double res = it->second.residual(r);
    if (res > worst || std::isnan(res)) {
      worst = res;
      worst_r = r;
    }
  }
  const bool ok = worst <= it->second.contract;
  switch (fmt) {
    case Format::plain:
      out << "name " << name << '\n'
          << "n " << n << '\n'
          << "max_residual " << fmt_real(worst) << '\n'
          << "worst_r " << fmt_real(worst_r) << '\n'
          << "contract " << fmt_real(it->second.contract) << '\n'
          << "within_contract " << (ok ? "true" : "false") << '\n';
      break;
    case Format::json: {
      json j;
      j["name"] = name;
      j["n"] = n;
      j["max_residual"] = json_real(worst);
      j["worst_r"] = json_real(worst_r);
      j["contract"] = it->second.contract;
      j["within_contract"] = ok;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "name,n,max_residual,worst_r,contract,within_contract\n"
          << name << ',' << n << ',' << fmt_real(worst) << ',' << fmt_real(worst_r) << ','
          << fmt_real(it->second.contract) << ',' << (ok ? "true" : "false") << '\n';
      break;
  }
  return ok ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------ classify

int cmd_classify(double a, double b, double eps, Format fmt, std::ostream& out) {
  const Params p(a, b);
  const RegionLabel l = classify(p, eps);
  switch (fmt) {
    case Format::plain:
      out << "regions " << l.to_string() << '\n'
          << "equality_point " << (l.is_equality_point ? "true" : "false") << '\n';
      break;
    case Format::json: {
      json j;
      j["a"] = a;
      j["b"] = b;
      j["regions"] = l.to_string();
      j["equality_point"] = l.is_equality_point;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,regions,equality_point\n"
          << fmt_real(a) << ',' << fmt_real(b) << ',' << csv_field(l.to_string()) << ','
          << (l.is_equality_point ? "true" : "false") << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string claim;
  std::string a_range;
  std::string b_range;
  int na = 10;
  int nb = 10;
  int nr = 200;
};

std::string holds_text(const ScanReport& r) {
  if (!r.applicable) return "na";
  return r.holds ? "true" : "false";
}

void write_scan_row(const ScanReport& r, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    json j;
    j["a"] = r.params.a();
    j["b"] = r.params.b();
    j["regions"] = r.region.to_string();
    j["claim"] = std::string(to_string(r.claim));
    j["holds"] = holds_text(r);
    j["worst_r"] = json_real(r.worst_r);
    j["worst_margin"] = json_real(r.worst_margin);
    j["n_samples"] = r.n_samples;
    out << j.dump() << '\n';
    return;
  }
  out << fmt_real(r.params.a()) << ',' << fmt_real(r.params.b()) << ','
      << csv_field(r.region.to_string()) << ',' << to_string(r.claim) << ',' << holds_text(r) << ','
      << fmt_real(r.worst_r) << ',' << fmt_real(r.worst_margin) << ',' << r.n_samples << '\n';
}

int cmd_scan(const ScanArgs& args, const Common& common, Format fmt, std::ostream& out) {
  const auto claim = parse_claim(args.claim);
  if (!claim) throw UsageError("scan: unknown claim '" + args.claim + "'");
  const Range ar = parse_range(args.a_range, "--a");
  const Range br = parse_range(args.b_range, "--b");
  if (args.na < 1 || args.nb < 1) throw UsageError("scan: --na and --nb must be positive");
  if (args.nr < 2) throw UsageError("scan: --nr must be at least 2");
  const std::vector<double> as = range_points(ar, args.na);
  const std::vector<double> bs = range_points(br, args.nb);
  if (as.size() * bs.size() > 1'000'000) throw UsageError("scan: na*nb must not exceed 1e6");
  if (!(common.tol >= 0.0)) throw UsageError("--tol must be non-negative");

  const std::vector<double> grid = default_r_grid(args.nr);
  const std::size_t total = as.size() * bs.size();
  std::vector<std::optional<ScanReport>> reports(total);
  std::vector<std::string> failures(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const Params p(as[i / bs.size()], bs[i % bs.size()]);
        reports[i] = verify_theorem(*claim, p, grid, common.tol);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  unsigned n_threads = common.threads > 0 ? static_cast<unsigned>(common.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (std::size_t i = 0; i < total; ++i) {
    if (!failures[i].empty()) throw std::runtime_error("scan: " + failures[i]);
  }

  bool consistent = true;
  if (fmt == Format::csv || fmt == Format::plain) {
    out << "a,b,regions,claim,holds,worst_r,worst_margin,n_samples\n";
  }
  for (const auto& r : reports) {
    write_scan_row(*r, fmt, out);
    if (r->applicable && !r->region_consistent) consistent = false;
  }
  return consistent ? kExitOk : kExitViolation;
}

// ------------------------------------------------------- turning-point

int cmd_turning_point(double a, double b, const std::string& which, Format fmt, std::ostream& out) {
  if (which != "f" && which != "g") throw UsageError("turning-point: --which must be f or g");
  const Params p(a, b);
  const auto tp = find_turning_point(p, which == "f" ? Quotient::f : Quotient::g);
  switch (fmt) {
    case Format::plain:
      if (!tp) {
        out << "NotFound: quotient " << which << " shows no interior extremum at scan resolution\n";
      } else {
        out << "r0 " << fmt_real(tp->r0) << '\n'
            << "bracket " << fmt_real(tp->lo) << ' ' << fmt_real(tp->hi) << '\n'
            << "kind " << to_string(tp->kind) << '\n'
            << "derivative_residual " << fmt_real(tp->derivative_residual) << '\n';
      }
      break;
    case Format::json: {
      json j;
      j["a"] = a;
      j["b"] = b;
      j["which"] = which;
      j["found"] = tp.has_value();
      if (tp) {
        j["r0"] = tp->r0;
        j["bracket"] = {tp->lo, tp->hi};
        j["kind"] = std::string(to_string(tp->kind));
        j["derivative_residual"] = json_real(tp->derivative_residual);
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,which,found,r0,lo,hi,kind,derivative_residual\n"
          << fmt_real(a) << ',' << fmt_real(b) << ',' << which << ',' << (tp ? "true" : "false");
      if (tp) {
        out << ',' << fmt_real(tp->r0) << ',' << fmt_real(tp->lo) << ',' << fmt_real(tp->hi) << ','
            << to_string(tp->kind) << ',' << fmt_real(tp->derivative_residual) << '\n';
      } else {
        out << ",nan,nan,nan,,nan\n";
      }
      break;
  }
  return tp ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-balanced hypergeometric functions and the cubic transformation"};
  app.name("rcthyper");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format: json, csv or plain");
  app.add_option("--out", common.out_path, "Write output to PATH instead of standard output");
  app.add_option("--tol", common.tol, "Margin tolerance for scans")->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads for scan (0 = hardware)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate F(a,b;c;x)");
  eval->add_option("--a", eval_args.a)->required();
  eval->add_option("--b", eval_args.b)->required();
  eval->add_option("--c", eval_args.c)->required();
  eval->add_option("--x", eval_args.x)->required();

  std::string verify_name;
  int verify_n = 99;
  auto* verify = app.add_subcommand("verify", "Check a transformation identity on a grid");
  verify->add_option("--name", verify_name, "rct1, rct2, landen1, landen2 or drct")->required();
  verify->add_option("--n", verify_n, "Grid size; points k/(n+1), k=1..n")->capture_default_str();

  double cls_a = 0, cls_b = 0, cls_eps = 0;
  auto* cls = app.add_subcommand("classify", "Report region membership of (a,b)");
  cls->add_option("--a", cls_a)->required();
  cls->add_option("--b", cls_b)->required();
  cls->add_option("--eps", cls_eps, "Widen region boundaries by eps")->capture_default_str();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Check a claim over an (a,b) grid; CSV rows");
  scan->add_option("--claim", scan_args.claim, "T2.1 T2.2 C2.3 T2.4 T2.5.1-4 L3.1f L3.1g L3.2J")->required();
  scan->add_option("--a", scan_args.a_range, "lo:hi")->required();
  scan->add_option("--b", scan_args.b_range, "lo:hi")->required();
  scan->add_option("--na", scan_args.na)->capture_default_str();
  scan->add_option("--nb", scan_args.nb)->capture_default_str();
  scan->add_option("--nr", scan_args.nr, "r-grid resolution")->capture_default_str();

  double tp_a = 0, tp_b = 0;
  std::string tp_which = "f";
  auto* tp = app.add_subcommand("turning-point", "Locate the extremum of f or g");
  tp->add_option("--a", tp_a)->required();
  tp->add_option("--b", tp_b)->required();
  tp->add_option("--which", tp_which, "f or g")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rcthyper: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "rcthyper: cannot open " << common.out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, resolve_format(common.format, Format::plain), *sink);
    if (verify->parsed()) {
      return cmd_verify(verify_name, verify_n, resolve_format(common.format, Format::plain), *sink);
    }
    if (cls->parsed()) {
      return cmd_classify(cls_a, cls_b, cls_eps, resolve_format(common.format, Format::plain), *sink);
    }
    if (scan->parsed()) return cmd_scan(scan_args, common, resolve_format(common.format, Format::csv), *sink);
    if (tp->parsed()) {
      return cmd_turning_point(tp_a, tp_b, tp_which, resolve_format(common.format, Format::plain), *sink);
    }
  } catch (const UsageError& e) {
    err << "rcthyper: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "rcthyper: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rcthyper: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace rcthyper::cli
