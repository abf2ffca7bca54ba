// fockarith command line front end.
//
// Exit codes: 0 success / all identities hold, 1 identity violation,
// 2 usage or configuration error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fockarith/arith.hpp"
#include "fockarith/conv_algebra.hpp"
#include "fockarith/fock_ops.hpp"
#include "fockarith/hardy.hpp"
#include "fockarith/parse.hpp"
#include "fockarith/serialize.hpp"
#include "fockarith/verify.hpp"

namespace {

using namespace fockarith;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<cplx(u64)>;

ScalarFn base_function(const std::string& name, const std::optional<std::string>& s_flag) {
  auto need_s = [&]() -> cplx {
    if (!s_flag) throw UsageError("function '" + name + "' needs --s");
    return parse_complex(*s_flag);
  };
  if (name == "mobius") return [](u64 n) { return cplx(mobius(n)); };
  if (name == "phi") return [](u64 n) { return cplx(static_cast<double>(euler_phi(n))); };
  if (name == "omega") return [](u64 n) { return cplx(omega(n)); };
  if (name == "nu0") return [](u64) { return cplx(1.0); };
  if (name == "nu1") return [](u64 n) { return cplx(static_cast<double>(n)); };
  if (name == "epsilon") return [](u64 n) { return cplx(n == 1 ? 1.0 : 0.0); };
  if (name == "sigma") {
    const cplx s = need_s();
    return [s](u64 n) { return sigma(s, n); };
  }
  if (name == "power") {
    const cplx s = need_s();
    return [s](u64 n) { return std::pow(static_cast<double>(n), s); };
  }
  if (name == "m") {
    const cplx s = need_s();
    if (s.imag() != 0.0 || s.real() < 1.0 || s.real() != std::floor(s.real()))
      throw UsageError("m_count needs a positive integer --s");
    const auto si = static_cast<unsigned>(s.real());
    return [si](u64 n) { return cplx(static_cast<double>(m_count(si, n))); };
  }
  throw UsageError("unknown arithmetic function '" + name + "'");
}

/// "name" or "dirichlet:a:b", "lcm:a:b", "unitary:a:b".
ScalarFn arith_function(const std::string& spec, const std::optional<std::string>& s_flag) {
  const auto parts = split(spec, ':');
  if (parts.size() == 3) {
    ConvKind kind;
    if (parts[0] == "dirichlet") {
      kind = ConvKind::dirichlet;
    } else if (parts[0] == "lcm") {
      kind = ConvKind::lcm;
    } else if (parts[0] == "unitary") {
      kind = ConvKind::unitary;
    } else {
      throw UsageError("unknown convolution '" + parts[0] + "'");
    }
    auto a = base_function(parts[1], s_flag);
    auto b = base_function(parts[2], s_flag);
    return [kind, a, b](u64 n) { return scalar_conv(kind, a, b, n); };
  }
  if (parts.size() != 1) throw UsageError("bad function spec '" + spec + "'");
  return base_function(spec, s_flag);
}

std::string format_value(cplx v) {
  if (v.imag() == 0.0) return format_double(v.real());
  return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + format_double(std::abs(v.imag())) + "i";
}

u64 nonneg(i64 v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be >= 0");
  return static_cast<u64>(v);
}
u64 positive(i64 v, const char* what) {
  if (v < 1) throw UsageError(std::string(what) + " must be >= 1");
  return static_cast<u64>(v);
}

ProjectorMode parse_mode(const std::string& m) {
  if (m == "normalized") return ProjectorMode::normalized;
  if (m == "literal") return ProjectorMode::literal;
  throw UsageError("projector mode must be 'normalized' or 'literal'");
}

CoprimeRange parse_krange(const std::string& r) {
  if (r == "1..n") return CoprimeRange::one_to_n;
  if (r == "0..n-1") return CoprimeRange::zero_to_n_minus_1;
  throw UsageError("k range must be '1..n' or '0..n-1'");
}

/// Operator spec string -> builder for a given dimension.
using OpBuilder = std::function<FockOperator(std::size_t)>;

OpBuilder op_builder(const std::string& spec) {
  const auto p = split(spec, ':');
  auto arg = [&](std::size_t i) -> i64 {
    if (i >= p.size()) throw UsageError("operator spec '" + spec + "' is missing arguments");
    return parse_int(p[i]);
  };
  const std::string& kind = p[0];
  if (kind == "identity") return [](std::size_t d) { return FockOperator::identity(d); };
  if (kind == "vacuum") return [](std::size_t d) { return projector(0, d + 1, d, ProjectorMode::literal); };
  if (kind == "up") return [](std::size_t d) { return phase_up(d); };
  if (kind == "down") return [](std::size_t d) { return phase_down(d); };
  if (kind == "pi") {
    const u64 j = nonneg(arg(1), "j"), n = positive(arg(2), "n");
    const ProjectorMode mode = p.size() > 3 ? parse_mode(p[3]) : ProjectorMode::normalized;
    return [=](std::size_t d) { return projector(j, n, d, mode); };
  }
  if (kind == "pibar") {
    const u64 j = nonneg(arg(1), "j"), k = positive(arg(2), "k");
    return [=](std::size_t d) { return projector_bar(j, k, d); };
  }
  if (kind == "rotated") {
    const u64 n = positive(arg(1), "n");
    return [=](std::size_t d) { return rotated(n, d); };
  }
  if (kind == "c" || kind == "t") {
    const u64 j = nonneg(arg(1), "j"), n = positive(arg(2), "n");
    const CoprimeRange r = p.size() > 3 ? parse_krange(p[3]) : CoprimeRange::one_to_n;
    if (kind == "c") return [=](std::size_t d) { return ramanujan_c(j, n, d, r); };
    return [=](std::size_t d) { return ramanujan_t(j, n, d, r); };
  }
  if (kind == "number") {
    if (p.size() < 3) throw UsageError("number operator spec is number:<alpha>:<j>");
    const auto alpha = base_function(p[1], std::nullopt);
    const u64 j = nonneg(parse_int(p[2]), "j");
    return [=](std::size_t d) { return number_op(alpha, j, d); };
  }
  if (kind == "zeta") {
    if (p.size() < 2) throw UsageError("zeta operator spec is zeta:<s>");
    const cplx s = parse_complex(p[1]);
    return [=](std::size_t d) { return zeta_op(s, d); };
  }
  throw UsageError("unknown operator kind '" + kind + "'");
}

std::optional<std::size_t> parse_dim(const std::string& text) {
  if (text == "auto") return std::nullopt;
  const i64 d = parse_int(text);
  if (d < 1) throw UsageError("--dim must be >= 1 or 'auto'");
  return static_cast<std::size_t>(d);
}

/// Smallest truncation whose kernel tail is below tol / (1 + max entry);
/// explicit requests below that are rejected.
FockOperator build_for_point(const OpBuilder& build, const DiscPoint& p, std::optional<std::size_t> dim, double tol) {
  std::size_t d = minimal_dim(p, tol);
  FockOperator op = build(d);
  for (int iter = 0; iter < 16; ++iter) {
    const std::size_t need = minimal_dim(p, tol, op.max_abs_entry());
    if (need <= d) break;
    d = need;
    op = build(d);
  }
  if (dim) {
    if (*dim < d)
      throw UsageError("--dim " + std::to_string(*dim) + " is below the sufficient truncation " + std::to_string(d));
    if (*dim > d) op = build(*dim);
  }
  return op;
}

std::ostream& output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw UsageError("cannot open '" + path + "' for writing");
  return *holder;
}

std::vector<u64> parse_u64_list(const std::string& s) {
  std::vector<u64> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) {
    const auto r = parse_range(part);
    for (i64 v = r.lo; v <= r.hi; ++v) out.push_back(nonneg(v, "list value"));
  }
  return out;
}

constexpr const char* kComplexHelp =
    "complex numbers: a, bi, a+bi, a-bi, or polar r@theta (theta in radians)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockarith: operator-valued arithmetic functions on the truncated Fock space"};
  app.footer(kComplexHelp);
  app.require_subcommand(1);

  // arith
  auto* arith = app.add_subcommand("arith", "tabulate a classical arithmetic function");
  std::string fn_name;
  std::optional<i64> arith_n;
  std::string arith_range;
  std::optional<std::string> arith_s;
  arith->add_option("--fn", fn_name,
                    "mobius, phi, omega, nu0, nu1, epsilon, sigma, power, m, or dirichlet|lcm|unitary:<a>:<b>")
      ->required();
  arith->add_option("--n", arith_n, "single argument");
  arith->add_option("--range", arith_range, "argument range lo..hi");
  arith->add_option("--s", arith_s, "exponent for sigma, power, m (complex allowed for sigma/power)");

  // op
  auto* op = app.add_subcommand("op", "build an operator and write its JSON record");
  std::string op_kind, op_mode = "normalized", op_alpha = "phi", op_out, op_krange = "1..n";
  i64 op_j = 0, op_n = 1, op_k = 1;
  std::size_t op_dim = 0;
  std::optional<std::string> op_s;
  op->add_option("--kind", op_kind, "pi, pibar, rotated, c, t, number, zeta, identity, up, down")->required();
  op->add_option("--j", op_j, "residue / offset j");
  op->add_option("--n", op_n, "modulus n");
  op->add_option("--k", op_k, "step k (pibar)");
  op->add_option("--dim", op_dim, "truncation dimension")->required();
  op->add_option("--mode", op_mode, "projector mode: normalized or literal");
  op->add_option("--alpha", op_alpha, "arithmetic function for the number operator");
  op->add_option("--s", op_s, "exponent for zeta / power");
  op->add_option("--krange", op_krange, "coprime k range for c, t: 1..n or 0..n-1");
  op->add_option("--out", op_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity-verification suite");
  std::string suite, v_dim = "auto", v_ns, v_js, v_lambda, v_out, v_krange = "1..n";
  SuiteOptions vopt;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--nmax", vopt.n_max, "largest n swept");
  verify->add_option("--dim", v_dim, "truncation dimension or 'auto'");
  verify->add_option("--n", v_ns, "explicit n values, e.g. 2,3,4 or 1..6");
  verify->add_option("--j", v_js, "j values");
  verify->add_option("--lambda", v_lambda, "disc point");
  verify->add_option("--s", vopt.s, "real exponent s > 1 (zeta suite)");
  verify->add_option("--seed", vopt.seed, "seed for random test functions");
  verify->add_option("--jobs", vopt.jobs, "worker threads");
  verify->add_option("--krange", v_krange, "coprime k range: 1..n or 0..n-1");
  verify->add_option("--out", v_out, "report path (default stdout)");

  // berezin
  auto* ber = app.add_subcommand("berezin", "Berezin symbol of an operator at one point (CSV)");
  std::string b_op, b_file, b_lambda, b_dim = "auto";
  double b_tol = 1e-13;
  ber->add_option("--op", b_op, "operator spec, e.g. identity, pi:0:3, c:0:6, number:phi:0, zeta:2");
  ber->add_option("--file", b_file, "operator JSON record (fixed dimension)");
  ber->add_option("--lambda", b_lambda, "disc point")->required();
  ber->add_option("--dim", b_dim, "truncation dimension or 'auto'");
  ber->add_option("--tol", b_tol, "kernel tail tolerance for --dim auto");

  // radial
  auto* rad = app.add_subcommand("radial", "Berezin symbol along a radial schedule (CSV)");
  std::string r_op, r_radii, r_dim = "auto";
  double r_phase = 0.0, r_tol = 1e-13;
  rad->add_option("--op", r_op, "operator spec")->required();
  rad->add_option("--radii", r_radii, "increasing radii in (0,1), comma separated")->required();
  rad->add_option("--phase", r_phase, "direction angle in radians");
  rad->add_option("--dim", r_dim, "truncation dimension or 'auto'");
  rad->add_option("--tol", r_tol, "kernel tail tolerance for --dim auto");

  // zeta
  auto* zet = app.add_subcommand("zeta", "Berezin symbol of the generalized zeta operator (CSV)");
  std::string z_s, z_radii;
  double z_phase = 0.0;
  zet->add_option("--s", z_s, "complex s with Re(s) > 1")->required();
  zet->add_option("--radii", z_radii, "increasing radii in (0,1)")->required();
  zet->add_option("--phase", z_phase, "direction angle in radians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*arith) {
      if (arith_n.has_value() == !arith_range.empty()) throw UsageError("give exactly one of --n or --range");
      const auto f = arith_function(fn_name, arith_s);
      const IntRange r = arith_n ? IntRange{*arith_n, *arith_n} : parse_range(arith_range);
      if (r.lo < 1) throw UsageError("arguments must be >= 1");
      std::cout << "n,value\n";
      for (i64 n = r.lo; n <= r.hi; ++n) std::cout << n << ',' << format_value(f(static_cast<u64>(n))) << '\n';
      return kExitOk;
    }

    if (*op) {
      std::string spec;
      const std::string j = std::to_string(op_j), n = std::to_string(op_n);
      if (op_kind == "pi") {
        spec = "pi:" + j + ":" + n + ":" + op_mode;
      } else if (op_kind == "pibar") {
        spec = "pibar:" + j + ":" + std::to_string(op_k);
      } else if (op_kind == "rotated") {
        spec = "rotated:" + n;
      } else if (op_kind == "c" || op_kind == "t") {
        spec = op_kind + ":" + j + ":" + n + ":" + op_krange;
      } else if (op_kind == "number") {
        if (op_alpha == "power" || op_alpha == "sigma") throw UsageError("use --kind zeta for n^-s");
        spec = "number:" + op_alpha + ":" + j;
      } else if (op_kind == "zeta") {
        if (!op_s) throw UsageError("--kind zeta needs --s");
        spec = "zeta:" + *op_s;
      } else {
        spec = op_kind;
      }
      if (op_dim < 1) throw UsageError("--dim must be >= 1");
      const FockOperator result = op_builder(spec)(op_dim);
      std::unique_ptr<std::ofstream> holder;
      output(op_out, holder) << to_json(result).dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      if (auto d = parse_dim(v_dim)) vopt.dim = *d;
      vopt.ns = parse_u64_list(v_ns);
      vopt.js = parse_u64_list(v_js);
      if (!v_lambda.empty()) vopt.lambda = DiscPoint(parse_complex(v_lambda)).value();
      vopt.range = parse_krange(v_krange);
      if (vopt.jobs < 1) throw UsageError("--jobs must be >= 1");
      if (vopt.n_max < 1) throw UsageError("--nmax must be >= 1");
      Report rep;
      if (suite == "all") {
        for (const auto& [name, fn] : suites::registry()) rep.append(fn(vopt));
      } else {
        if (!suites::registry().count(suite)) throw UsageError("unknown suite '" + suite + "'");
        rep = run_suite(suite, vopt);
      }
      std::unique_ptr<std::ofstream> holder;
      output(v_out, holder) << to_json(rep).dump(1) << '\n';
      std::cerr << suite << ": " << rep.records.size() << " checks, " << rep.failures() << " violations, "
                << rep.skips() << " skipped, worst deviation " << rep.worst_deviation() << '\n';
      return rep.passed() ? kExitOk : kExitViolation;
    }

    if (*ber) {
      const DiscPoint p(parse_complex(b_lambda));
      FockOperator a = FockOperator::identity(1);
      if (!b_file.empty()) {
        std::ifstream in(b_file);
        if (!in) throw UsageError("cannot read '" + b_file + "'");
        a = operator_from_json(json::parse(in));
        const std::size_t need = minimal_dim(p, b_tol, a.max_abs_entry());
        if (a.dim() < need)
          throw UsageError("operator dimension " + std::to_string(a.dim()) + " is below the sufficient truncation " +
                           std::to_string(need));
      } else if (!b_op.empty()) {
        a = build_for_point(op_builder(b_op), p, parse_dim(b_dim), b_tol);
      } else {
        throw UsageError("give --op or --file");
      }
      const Estimate e = berezin(a, p);
      write_csv_header(std::cout);
      write_csv_row(std::cout, {p.modulus(), std::arg(p.value()), e.value, e.error});
      return kExitOk;
    }

    if (*rad) {
      const RadialSchedule sched(parse_double_list(r_radii), r_phase);
      const auto build = op_builder(r_op);
      const auto dim = parse_dim(r_dim);
      const RadialTrace t = radial_limit(
          [&](const DiscPoint& p) { return berezin(build_for_point(build, p, dim, r_tol), p); }, sched);
      write_csv(std::cout, t);
      return kExitOk;
    }

    if (*zet) {
      const cplx s = parse_complex(z_s);
      const RadialSchedule sched(parse_double_list(z_radii), z_phase);
      write_csv(std::cout, radial_limit([&](const DiscPoint& p) { return berezin_zeta(s, p); }, sched));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: bad operator record: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
