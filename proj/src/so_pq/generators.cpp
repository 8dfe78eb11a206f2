#include "lietab/so_pq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lietab {

std::string pair_name(IndexPair pair) {
  std::string a = std::to_string(pair.first), b = std::to_string(pair.second);
  if (pair.first > 9 || pair.second > 9) return "L" + a + "," + b;
  return "L" + a + b;
}

Metric::Metric(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("metric signature must be non-negative");
}

int Metric::g(int index) const {
  if (index < 1 || index > size()) throw std::out_of_range("metric index out of range");
  return index <= p_ ? 1 : -1;
}

ExactMatrix Metric::matrix() const {
  ExactMatrix m(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) m(i - 1, i - 1) = g(i);
  return m;
}

std::string Metric::to_string() const { return std::to_string(p_) + "," + std::to_string(q_); }

Metric Metric::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("signature must look like p,q");
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("signature must look like p,q");
    return std::stoi(std::string(s));
  };
  return Metric(number(text.substr(0, comma)), number(text.substr(comma + 1)));
}

GeneratorSet::GeneratorSet(Metric metric, std::vector<Generator> generators)
    : metric_(metric), generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end(),
            [](const Generator& x, const Generator& y) { return x.pair < y.pair; });
  expander_ = std::make_shared<const BasisExpander>(matrices());
}

std::vector<ExactMatrix> GeneratorSet::matrices() const {
  std::vector<ExactMatrix> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.matrix);
  return out;
}

std::size_t GeneratorSet::position(IndexPair pair) const {
  auto it = std::lower_bound(generators_.begin(), generators_.end(), pair,
                             [](const Generator& g, IndexPair p) { return g.pair < p; });
  if (it == generators_.end() || it->pair != pair)
    throw std::out_of_range("no generator " + pair_name(pair));
  return static_cast<std::size_t>(it - generators_.begin());
}

ExactMatrix GeneratorSet::operator()(int a, int b) const {
  if (a == b) throw std::out_of_range("L_aa is not a generator");
  if (a < b) return generators_[position({a, b})].matrix;
  return -generators_[position({b, a})].matrix;
}

GeneratorSet GeneratorSet::with_perturbed_entry(IndexPair pair, std::size_t row, std::size_t col,
                                                const GaussianRational& delta) const {
  std::vector<Generator> copy = generators_;
  auto& target = copy[position(pair)].matrix;
  if (row >= target.dim() || col >= target.dim()) throw std::out_of_range("perturbed entry out of range");
  target(row, col) += delta;
  return GeneratorSet(metric_, std::move(copy));
}

GeneratorSet build_generators(const Metric& metric) {
  const int n = metric.size();
  if (n < 2) throw std::invalid_argument("so(p,q) needs p + q >= 2");
  const auto i = GaussianRational::imaginary_unit();
  std::vector<Generator> gens;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      ExactMatrix m(static_cast<std::size_t>(n));
      // Row a carries i g_bb in column b; row b carries -i g_aa in column a.
      m(a - 1, b - 1) = i * GaussianRational(metric.g(b));
      m(b - 1, a - 1) = -i * GaussianRational(metric.g(a));
      gens.push_back({{a, b}, pair_name({a, b}), std::move(m)});
    }
  return GeneratorSet(metric, std::move(gens));
}

namespace {

void add_term(std::map<IndexPair, GaussianRational>& acc, int sign, int x, int y) {
  if (x == y || sign == 0) return;
  if (x > y) {
    std::swap(x, y);
    sign = -sign;
  }
  acc[{x, y}] += GaussianRational(0, sign);
}

}  // namespace

FormalSum expected_bracket(const Metric& metric, IndexPair lhs, IndexPair rhs) {
  const int a = lhs.first, b = lhs.second, c = rhs.first, d = rhs.second;
  for (int idx : {a, b, c, d})
    if (idx < 1 || idx > metric.size()) throw std::out_of_range("index pair outside the metric");
  if (a == b || c == d) throw std::invalid_argument("index pair with repeated index");
  auto g = [&](int x, int y) { return x == y ? metric.g(x) : 0; };
  std::map<IndexPair, GaussianRational> acc;
  add_term(acc, g(a, d), b, c);
  add_term(acc, g(b, c), a, d);
  add_term(acc, -g(a, c), b, d);
  add_term(acc, -g(b, d), a, c);
  FormalSum out;
  for (auto& [pair, coeff] : acc)
    if (!coeff.is_zero()) out.push_back({coeff, pair});
  return out;
}

std::string to_string(const FormalSum& sum) {
  std::vector<std::pair<GaussianRational, std::string>> terms;
  for (const auto& term : sum) terms.emplace_back(term.coefficient, pair_name(term.pair));
  return format_combination(terms);
}

std::vector<GaussianRational> to_coefficients(const GeneratorSet& gs, const FormalSum& sum) {
  std::vector<GaussianRational> out(gs.size());
  for (const auto& term : sum) out[gs.position(term.pair)] += term.coefficient;
  return out;
}

FormalSum from_coefficients(const GeneratorSet& gs, std::span<const GaussianRational> coeffs) {
  FormalSum out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) out.push_back({coeffs[k], gs.generators()[k].pair});
  return out;
}

CommutationReport verify_commutation(const GeneratorSet& gs) {
  CommutationReport report{gs.metric(), 0, {}};
  auto gens = gs.generators();
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x + 1; y < gens.size(); ++y) {
      ++report.pair_count;
      FormalSum expected = expected_bracket(gs.metric(), gens[x].pair, gens[y].pair);
      auto got = gs.expander().expand(commutator(gens[x].matrix, gens[y].matrix));
      if (got && *got == to_coefficients(gs, expected)) continue;
      std::optional<FormalSum> got_sum;
      if (got) got_sum = from_coefficients(gs, *got);
      report.failures.push_back({gens[x].pair, gens[y].pair, std::move(got_sum), std::move(expected)});
    }
  return report;
}

}  // namespace lietab
