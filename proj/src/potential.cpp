#include "nsbf/potential.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace nsbf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& text, std::size_t line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw DomainError("potential table line " + std::to_string(line) + ": '" + text +
                      "' is not a finite real number");
  return v;
}

// Degree-5 (or lower, for short tables) Lagrange interpolation on the window of
// table points closest to x.
double interpolate(const PotentialTable& t, double x) {
  const auto n = static_cast<std::ptrdiff_t>(t.x.size());
  const std::ptrdiff_t width = std::min<std::ptrdiff_t>(6, n);
  const auto upper = std::upper_bound(t.x.begin(), t.x.end(), x) - t.x.begin();
  std::ptrdiff_t start = std::clamp<std::ptrdiff_t>(upper - width / 2, 0, n - width);
  double value = 0.0;
  for (std::ptrdiff_t k = start; k < start + width; ++k) {
    double basis = 1.0;
    for (std::ptrdiff_t m = start; m < start + width; ++m)
      if (m != k) basis *= (x - t.x[m]) / (t.x[k] - t.x[m]);
    value += basis * t.q[k];
  }
  return value;
}

Vector<double> resample(const PotentialTable& t, const Grid& grid) {
  if (t.x.size() != t.q.size()) throw DomainError("potential table columns differ in length");
  if (t.x.size() < 2) throw DomainError("potential table needs at least two rows");
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (!std::isfinite(t.x[i]) || !std::isfinite(t.q[i]))
      throw DomainError("potential table row " + std::to_string(i) + " is not finite");
    if (i > 0 && !(t.x[i] > t.x[i - 1]))
      throw DomainError("potential table abscissae must be strictly increasing");
  }
  const double slack = 1e-12 * grid.length();
  if (t.x.front() > slack || t.x.back() < grid.length() - slack)
    throw DomainError("potential table does not cover [0, d]");

  const Vector<double> nodes = grid.nodes();
  Vector<double> q(grid.size());
  const bool on_grid = static_cast<Index>(t.x.size()) == grid.size() &&
                       std::equal(t.x.begin(), t.x.end(), nodes.data());
  for (Index i = 0; i < grid.size(); ++i) q[i] = on_grid ? t.q[i] : interpolate(t, nodes[i]);
  return q;
}

}  // namespace

Potential make_potential(const PotentialSpec& spec, const Grid& grid) {
  Vector<double> samples;
  if (spec.kind == PotentialKind::SquareBarrier) {
    if (!std::isfinite(spec.amplitude)) throw DomainError("square-barrier amplitude C must be finite");
    samples = Vector<double>::Constant(grid.size(), spec.amplitude);
  } else {
    samples = resample(spec.table, grid);
  }
  RealGridFunction q(grid, std::move(samples));
  RealGridFunction Q = cumulative_integral(q);
  if (spec.kind == PotentialKind::SquareBarrier) {
    // exact antiderivative C x of the constant
    for (Index i = 0; i < grid.size(); ++i) Q[i] = spec.amplitude * grid.node(i);
  }
  const double total = Q[grid.size() - 1];
  return Potential{spec.kind, spec.amplitude, std::move(q), std::move(Q), total};
}

double q_at(const Potential& p, Index node) {
  if (node < 0 || node >= p.samples.size())
    throw DomainError("node index " + std::to_string(node) + " out of range");
  return p.samples[node];
}

double Q_at(const Potential& p, Index node) {
  if (node < 0 || node >= p.cumulative.size())
    throw DomainError("node index " + std::to_string(node) + " out of range");
  return p.cumulative[node];
}

PotentialTable parse_potential_csv(std::istream& in) {
  PotentialTable t;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!header) {
      std::string compact;
      for (char c : s)
        if (c != ' ' && c != '\t') compact += c;
      if (compact != "x,q") throw DomainError("potential table header must be 'x,q'");
      header = true;
      continue;
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
      throw DomainError("potential table line " + std::to_string(line_no) + " needs two columns");
    t.x.push_back(parse_number(trim(std::string_view(s).substr(0, comma)), line_no));
    t.q.push_back(parse_number(trim(std::string_view(s).substr(comma + 1)), line_no));
  }
  if (!header) throw DomainError("potential table is empty");
  return t;
}

PotentialTable read_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open potential table '" + path + "'");
  return parse_potential_csv(in);
}

}  // namespace nsbf
