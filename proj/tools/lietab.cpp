#include "lietab/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unistd.h>

using namespace lietab;

namespace {

int emit(const CommandResult& result, const std::string& output) {
  if (output.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + output);
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact so(p,q) commutation, root and periodic-table tools"};
  app.require_subcommand(1);

  std::string signature = "4,2";
  std::string format = "text";
  std::string output;
  std::string spin;
  std::optional<int> z;
  std::optional<std::string> symbol;
  std::optional<std::string> dotted;
  std::string l, l_dot;
  std::optional<std::string> nu;

  auto common = [&](CLI::App* sub, bool with_signature) {
    if (with_signature) sub->add_option("--signature", signature, "p,q")->capture_default_str();
    sub->add_option("--format", format, "text, json or svg")->capture_default_str();
    sub->add_option("--output", output, "write here instead of standard output");
  };
  auto* verify = app.add_subcommand("verify", "check commutators, ranks, emulation chains and Casimirs");
  common(verify, true);
  auto* roots = app.add_subcommand("roots", "realized root table");
  common(roots, true);
  auto* tower = app.add_subcommand("tower", "one spin slice of the element tower with its mirror");
  common(tower, false);
  tower->add_option("--spin", spin, "-1/2 or +1/2")->required();
  auto* elements = app.add_subcommand("elements", "look up an element by Z or symbol");
  common(elements, false);
  auto* by_z = elements->add_option("--z", z, "atomic number");
  auto* by_symbol = elements->add_option("--symbol", symbol, "element symbol");
  by_z->excludes(by_symbol);
  elements->add_option("--dotted", dotted, "eight dotted labels nu,nu_dot,lam,lam_dot,mu,mu_dot,sigma,sigma_dot");
  auto* mass = app.add_subcommand("mass", "mass of a multiplet node");
  mass->add_option("l", l)->required();
  mass->add_option("l_dot", l_dot)->required();
  mass->add_option("nu", nu);

  CLI11_PARSE(app, argc, argv);

  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) && output.empty();
  try {
    Format fmt = parse_format(format);
    if (verify->parsed()) return emit(cmd_verify(Metric::parse(signature), fmt, color), output);
    if (roots->parsed()) return emit(cmd_roots(Metric::parse(signature), fmt), output);
    if (tower->parsed()) return emit(cmd_tower(parse_spin(spin), fmt), output);
    if (elements->parsed()) {
      ElementQuery query{z, symbol, std::nullopt};
      if (dotted) query.dotted = DottedKet::parse(*dotted);
      return emit(cmd_elements(query, fmt), output);
    }
    std::optional<HalfInt> nu_value;
    if (nu) nu_value = HalfInt::parse(*nu);
    return emit(cmd_mass(HalfInt::parse(l), HalfInt::parse(l_dot), nu_value), output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
