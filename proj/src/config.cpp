#include "nsbf/config.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "CLI11.hpp"

namespace nsbf {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 5> kCommands = {{
    {Command::Scatter, "scatter"},
    {Command::Green, "green"},
    {Command::Spectrum, "spectrum"},
    {Command::NsbfCheck, "nsbf-check"},
    {Command::Integrand, "integrand"},
}};

std::string join_keys() {
  std::string out;
  for (const auto& k : config_keys()) out += (out.empty() ? "" : ", ") + k;
  return out;
}

double parse_double(std::string_view text, const std::string& what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("cannot parse " + what + " from '" + std::string(text) + "'");
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Complex z) {
  return fmt(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const auto& e : v) out += (out.empty() ? "" : ",") + fmt(e);
  return out;
}

void validate(const RunConfig& c) {
  if (c.potential != "square" && c.potential != "table")
    throw DomainError("potential must be 'square' or 'table', got '" + c.potential + "'");
  if (c.potential == "table" && c.table.empty()) throw DomainError("potential=table needs a table path");
  if (!std::isfinite(c.C)) throw DomainError("C must be finite");
  Grid(c.d, c.grid_M);  // validates d and M
  if (c.K < 1 || c.K > detail::kMaxPowerIndex)
    throw DomainError("K must be in [1, " + std::to_string(detail::kMaxPowerIndex) + "], got " + std::to_string(c.K));
  if (c.N < 0 || c.N > kMaxTruncationOrder)
    throw DomainError("N must be in [0, " + std::to_string(kMaxTruncationOrder) + "], got " + std::to_string(c.N));
  if (2 * c.N + 1 > c.K) throw DomainError("K must be at least 2N+1 = " + std::to_string(2 * c.N + 1));
  if (!(c.omega_max > 0.0) || !std::isfinite(c.omega_max)) throw DomainError("Omega must be positive");
  if (!(c.omega_step > 0.0) || !std::isfinite(c.omega_step)) throw DomainError("omega-step must be positive");
  if (!(c.sweep_min >= 0.0) || !(c.sweep_max >= c.sweep_min) || !(c.sweep_step > 0.0) || !std::isfinite(c.sweep_max))
    throw DomainError("sweep needs 0 <= sweep-min <= sweep-max and sweep-step > 0");
  if (c.lambda.empty()) throw DomainError("lambda list is empty");
  if (c.x.empty() || c.y.empty()) throw DomainError("x and y lists must be nonempty");
  if (c.x.size() != c.y.size() && c.x.size() != 1 && c.y.size() != 1)
    throw DomainError("x and y lists must have equal length (or one of them a single value)");
  if (!(c.bound_tol > 0.0)) throw DomainError("bound-tol must be positive");
  c.variants();
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "unknown";
}

std::vector<GreenVariant> RunConfig::variants() const {
  if (variant == "all") return {GreenVariant::Jost, GreenVariant::Plain, GreenVariant::Head1, GreenVariant::Head2};
  return {parse_variant(variant)};
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "potential", "C",       "d",        "table",         "grid-M",    "K",         "N",
      "Omega",     "omega-step", "lambda", "x",             "y",         "variant",   "out",
      "seed",      "wronskian-tol", "sweep-min", "sweep-max", "sweep-step", "kappa-max", "bound-tol"};
  return keys;
}

Complex parse_complex(const std::string& raw) {
  std::string t;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  const std::string what = "complex number";
  if (t.empty()) throw DomainError("empty complex number");
  if (t.front() == '(') {
    const auto comma = t.find(',');
    if (t.back() != ')' || comma == std::string::npos) throw DomainError("cannot parse complex number '" + raw + "'");
    return {parse_double(std::string_view(t).substr(1, comma - 1), what),
            parse_double(std::string_view(t).substr(comma + 1, t.size() - comma - 2), what)};
  }
  if (t.back() != 'i') return {parse_double(t, what), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s, what);
  };
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {parse_double(std::string_view(t).substr(0, split), what), imag_part(std::string_view(t).substr(split))};
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app("NSBF scattering data and Green functions for 1D Schroedinger operators", "nsbf");
  app.allow_config_extras(CLI::config_extras_mode::error);
  std::string command;
  std::vector<std::string> lambda_text;
  std::string seed = "complex";
  app.add_option("command", command, "scatter | green | spectrum | nsbf-check | integrand")->required();
  app.set_config("--config", "", "key=value configuration file; flags override it");
  app.add_option("--potential", c.potential, "square | table");
  app.add_option("--C", c.C, "square barrier amplitude");
  app.add_option("--d", c.d, "support length (square barrier)");
  app.add_option("--table", c.table, "CSV with header x,q (potential=table; d = last x)");
  app.add_option("--grid-M", c.grid_M, "grid nodes, (M-1) divisible by 5");
  app.add_option("--K", c.K, "number of formal powers");
  app.add_option("--N", c.N, "NSBF truncation order");
  app.add_option("--Omega", c.omega_max, "truncation of the spectral integral");
  app.add_option("--omega-step", c.omega_step, "quadrature step in omega");
  app.add_option("--lambda", lambda_text, "spectral parameters, comma separated (a+bi)")->delimiter(',');
  app.add_option("--x", c.x, "first Green function arguments")->delimiter(',');
  app.add_option("--y", c.y, "second Green function arguments")->delimiter(',');
  app.add_option("--variant", c.variant, "jost | plain | head1 | head2 | all");
  app.add_option("--out", c.out, "output directory");
  app.add_option("--seed", seed, "complex | real");
  app.add_option("--wronskian-tol", c.wronskian_tol, "model acceptance tolerance (<= 0 disables)");
  app.add_option("--sweep-min", c.sweep_min, "first omega of scatter/integrand sweeps");
  app.add_option("--sweep-max", c.sweep_max, "last omega of scatter/integrand sweeps");
  app.add_option("--sweep-step", c.sweep_step, "omega step of scatter/integrand sweeps");
  app.add_option("--kappa-max", c.kappa_max, "bound-state search bound (<= 0: automatic)");
  app.add_option("--bound-tol", c.bound_tol, "bisection tolerance in kappa");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ExtrasError& e) {
    throw DomainError(std::string(e.what()) + "; valid keys: " + join_keys());
  } catch (const CLI::ConfigError& e) {
    throw DomainError(std::string(e.what()) + "; valid keys: " + join_keys());
  } catch (const CLI::ParseError& e) {
    throw DomainError(e.what());
  }

  bool known = false;
  for (const auto& [cmd, name] : kCommands) {
    if (command == name) {
      c.command = cmd;
      known = true;
    }
  }
  if (!known) throw DomainError("unknown command '" + command + "' (valid: scatter, green, spectrum, nsbf-check, integrand)");
  if (seed == "complex")
    c.seed = SeedChoice::Complex;
  else if (seed == "real")
    c.seed = SeedChoice::Real;
  else
    throw DomainError("seed must be 'complex' or 'real', got '" + seed + "'");
  if (!lambda_text.empty()) {
    c.lambda.clear();
    for (const auto& s : lambda_text) c.lambda.push_back(parse_complex(s));
  }
  validate(c);
  return c;
}

std::string canonical_config(const RunConfig& c) {
  std::ostringstream out;
  out << "command=" << command_name(c.command) << "\n"
      << "potential=" << c.potential << "\n"
      << "C=" << fmt(c.C) << "\n"
      << "d=" << fmt(c.d) << "\n"
      << "table=" << c.table << "\n"
      << "grid-M=" << c.grid_M << "\n"
      << "K=" << c.K << "\n"
      << "N=" << c.N << "\n"
      << "Omega=" << fmt(c.omega_max) << "\n"
      << "omega-step=" << fmt(c.omega_step) << "\n"
      << "lambda=" << join(c.lambda) << "\n"
      << "x=" << join(c.x) << "\n"
      << "y=" << join(c.y) << "\n"
      << "variant=" << c.variant << "\n"
      << "seed=" << (c.seed == SeedChoice::Complex ? "complex" : "real") << "\n"
      << "wronskian-tol=" << fmt(c.wronskian_tol) << "\n"
      << "sweep-min=" << fmt(c.sweep_min) << "\n"
      << "sweep-max=" << fmt(c.sweep_max) << "\n"
      << "sweep-step=" << fmt(c.sweep_step) << "\n"
      << "kappa-max=" << fmt(c.kappa_max) << "\n"
      << "bound-tol=" << fmt(c.bound_tol) << "\n";
  return out.str();
}

std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical_config(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nsbf
