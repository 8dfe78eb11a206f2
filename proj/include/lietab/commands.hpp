#pragma once

#include "lietab/cartan_weyl.hpp"
#include "lietab/periodic.hpp"
#include "lietab/so_pq.hpp"

#include <optional>
#include <string>

namespace lietab {

enum class Verb { verify, roots, tower, elements, mass };
enum class Format { text, json, svg };

/// "text", "json", "svg"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view text);

struct RunConfig {
  Verb command = Verb::verify;
  Metric signature{4, 2};
  std::optional<Spin> spin;
  Format format = Format::text;
  std::optional<std::string> output;  ///< standard output when empty
  bool color = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Structural checks decide the exit code; printed tables are reported only.
CommandResult cmd_verify(const GeneratorSet& gs, Format format = Format::text, bool color = false);
CommandResult cmd_verify(const Metric& signature, Format format = Format::text, bool color = false);

/// Throws WrongSignature outside (4,2) and (4,4).
RootTable realized_roots(const Metric& signature);
CommandResult cmd_roots(const Metric& signature, Format format);

/// Matter floors 1..8 followed by their mirrors -1..-8.
TowerSlice tower_with_mirror(Spin s);
CommandResult cmd_tower(Spin s, Format format);

struct ElementQuery {
  std::optional<int> z;
  std::optional<std::string> symbol;
  std::optional<DottedKet> dotted;
};

/// Throws UnknownElement for an unknown symbol or Z outside 1..120.
CommandResult cmd_elements(const ElementQuery& query, Format format = Format::text);

CommandResult cmd_mass(HalfInt l, HalfInt l_dot, std::optional<HalfInt> nu);

}  // namespace lietab
