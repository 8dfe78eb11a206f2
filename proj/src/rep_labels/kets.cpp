#include "lietab/rep_labels.hpp"

#include <sstream>
#include <stdexcept>

namespace lietab {

namespace {

// m in {-j, -j+1, ..., j}
bool in_ladder(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && abs(m) <= j && (j.twice() - m.twice()) % 2 == 0;
}

bool non_negative(HalfInt h) { return h.twice() >= 0; }

}  // namespace

WeightKet WeightKet::make(HalfInt l, HalfInt l_dot, HalfInt m, HalfInt m_dot) {
  if (!non_negative(l) || !non_negative(l_dot)) throw std::invalid_argument("l and l_dot must be non-negative");
  if (!in_ladder(l, m)) throw std::invalid_argument("m = " + m.to_string() + " outside l = " + l.to_string());
  if (!in_ladder(l_dot, m_dot))
    throw std::invalid_argument("m_dot = " + m_dot.to_string() + " outside l_dot = " + l_dot.to_string());
  return {l, l_dot, m, m_dot};
}

std::optional<WeightKet> apply_ladder(const WeightKet& ket, LadderOp op) {
  const HalfInt one = HalfInt::from_int(1);
  WeightKet out = ket;
  switch (op) {
    case LadderOp::x_plus: out.m = ket.m + one; break;
    case LadderOp::x_minus: out.m = ket.m - one; break;
    case LadderOp::y_plus: out.m_dot = ket.m_dot + one; break;
    case LadderOp::y_minus: out.m_dot = ket.m_dot - one; break;
  }
  if (abs(out.m) > out.l || abs(out.m_dot) > out.l_dot) return std::nullopt;
  return out;
}

std::vector<WeightKet> multiplet_states(HalfInt l, HalfInt l_dot) {
  if (!non_negative(l) || !non_negative(l_dot)) throw std::invalid_argument("l and l_dot must be non-negative");
  std::vector<WeightKet> out;
  for (int m = -l.twice(); m <= l.twice(); m += 2)
    for (int md = -l_dot.twice(); md <= l_dot.twice(); md += 2)
      out.push_back({l, l_dot, HalfInt::from_twice(m), HalfInt::from_twice(md)});
  return out;
}

MadelungKet MadelungKet::make(int n, int l, int m, Spin s) {
  if (n == 0) throw std::invalid_argument("no n = 0 shell exists");
  int size = n < 0 ? -n : n;
  if (l < 0 || l > size - 1)
    throw std::invalid_argument("l = " + std::to_string(l) + " outside 0.." + std::to_string(size - 1));
  if (m < -l || m > l) throw std::invalid_argument("m = " + std::to_string(m) + " outside -l..l");
  return {n, l, m, s};
}

std::string MadelungKet::to_string() const {
  return "|" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m) + "," + lietab::to_string(s) +
         "⟩";
}

DottedKet DottedKet::make(HalfInt nu, HalfInt nu_dot, HalfInt lam, HalfInt lam_dot, HalfInt mu, HalfInt mu_dot,
                          HalfInt sigma, HalfInt sigma_dot) {
  if (!non_negative(nu) || !non_negative(nu_dot)) throw std::invalid_argument("nu and nu_dot must be non-negative");
  if (!in_ladder(nu, lam) || !in_ladder(nu_dot, lam_dot)) throw std::invalid_argument("lambda outside its nu range");
  if (!in_ladder(abs(lam), mu) || !in_ladder(abs(lam_dot), mu_dot))
    throw std::invalid_argument("mu outside its lambda range");
  for (HalfInt s : {sigma, sigma_dot})
    if (s.twice() != 1 && s.twice() != -1) throw std::invalid_argument("sigma labels must be -1/2 or +1/2");
  return {nu, nu_dot, lam, lam_dot, mu, mu_dot, sigma, sigma_dot};
}

DottedKet DottedKet::parse(std::string_view text) {
  std::vector<HalfInt> labels;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) labels.push_back(HalfInt::parse(item));
  if (labels.size() != 8) throw std::invalid_argument("a dotted ket has eight labels");
  return make(labels[0], labels[1], labels[2], labels[3], labels[4], labels[5], labels[6], labels[7]);
}

MadelungKet dotted_to_madelung(const DottedKet& d, Branch branch) {
  HalfInt n = abs(d.nu - d.nu_dot);
  HalfInt l = abs(d.lam - d.lam_dot);
  HalfInt m = abs(d.mu - d.mu_dot);
  if (!n.is_integer() || !l.is_integer() || !m.is_integer())
    throw std::invalid_argument("dotted labels give a non-integer Madelung label");
  if (d.sigma_dot != -d.sigma) throw std::invalid_argument("spin needs sigma_dot = -sigma");
  Spin s = d.sigma.twice() < 0 ? Spin::minus_half : Spin::plus_half;
  int shell = n.twice() / 2;
  if (branch == Branch::antimatter) shell = -shell;
  return MadelungKet::make(shell, l.twice() / 2, m.twice() / 2, s);
}

std::uint64_t sym_dim(std::uint32_t k, std::uint32_t r, std::uint32_t p) {
  return (std::uint64_t{k} + 1) * (std::uint64_t{r} + 1) * (std::uint64_t{p} + 1);
}

std::vector<std::pair<HalfInt, HalfInt>> extended_weyl_diagram(HalfInt max_sum) {
  std::vector<std::pair<HalfInt, HalfInt>> out;
  for (int sum = 0; sum <= max_sum.twice(); ++sum)
    for (int l = 0; l <= sum; ++l) out.emplace_back(HalfInt::from_twice(l), HalfInt::from_twice(sum - l));
  return out;
}

}  // namespace lietab
