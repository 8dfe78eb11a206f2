// Tables are kept in their printed form, including misprints, and parsed
// into PrintedRelation values. Index families such as "[K_i,J_j] = 0" are
// expanded over the printed index ranges.

#include "lietab/relations.hpp"

#include <regex>
#include <sstream>

namespace lietab {

namespace {

bool is_coefficient(const std::string& token) {
  static const std::regex pattern(R"(^-?(\d+(/\d+)?i?|i)$)");
  return std::regex_match(token, pattern);
}

GaussianRational parse_coefficient(std::string token) {
  bool negative = !token.empty() && token.front() == '-';
  if (negative) token.erase(0, 1);
  GaussianRational value;
  if (token.back() == 'i') {
    token.pop_back();
    value = GaussianRational(0, token.empty() ? Rational(1) : parse_rational(token));
  } else {
    value = GaussianRational(parse_rational(token));
  }
  return negative ? -value : value;
}

LinearExpr parse_rhs(const std::string& rhs) {
  std::istringstream in(rhs);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  LinearExpr out;
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  int sign = 1;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string tok = tokens[k];
    if (tok == "+" || tok == "-") {
      sign = tok == "-" ? -1 : 1;
      continue;
    }
    GaussianRational coeff(sign);
    if (is_coefficient(tok) && k + 1 < tokens.size()) {
      coeff *= parse_coefficient(tok);
      tok = tokens[++k];
    } else if (tok.front() == '-') {
      coeff = -coeff;
      tok.erase(0, 1);
    }
    out.push_back({coeff, tok});
    sign = 1;
  }
  return out;
}

PrintedRelation parse(const std::string& source, const std::string& text) {
  auto close = text.find(']');
  auto comma = text.find(',');
  auto eq = text.find('=', close);
  if (text.front() != '[' || close == std::string::npos || comma > close || eq == std::string::npos)
    throw std::logic_error("malformed relation text: " + text);
  return {source, text, text.substr(1, comma - 1), text.substr(comma + 1, close - comma - 1),
          parse_rhs(text.substr(eq + 1))};
}

std::vector<PrintedRelation> table(const std::string& source, std::initializer_list<const char*> lines) {
  std::vector<PrintedRelation> out;
  for (const char* line : lines) out.push_back(parse(source, line));
  return out;
}

// "[Ai,Bj] = 0" for every pair of printed indices.
void zeros(std::vector<PrintedRelation>& out, const std::string& source, const std::string& a,
           const std::string& b, std::initializer_list<const char*> indices) {
  for (const char* i : indices)
    for (const char* j : indices) out.push_back(parse(source, "[" + a + i + "," + b + j + "] = 0"));
}

// [E_i, E_j] = c i eps_ijk E_k for a three-component family.
void epsilon(std::vector<PrintedRelation>& out, const std::string& source, const std::string& family,
             const char* sign) {
  std::string s = sign;
  for (const char* cyc : {"123", "231", "312"}) {
    std::string text = "[" + family + cyc[0] + "," + family + cyc[1] + "] = " + s + "i " + family + cyc[2];
    out.push_back(parse(source, text));
  }
}

// Ladder table rows for an so(2,1) pair written with index 0 for the Cartan element.
std::vector<PrintedRelation> cw_rows(const std::string& source, const std::string& e, const char* zero,
                                     const char* plus_row, const char* minus_row, const char* bracket_row) {
  std::string z = e + zero;
  return {parse(source, "[" + z + "," + e + "+] = " + std::string(plus_row) + e + "+"),
          parse(source, "[" + z + "," + e + "-] = " + std::string(minus_row) + e + "-"),
          parse(source, "[" + e + "+," + e + "-] = " + std::string(bracket_row) + " " + z)};
}

void append(std::vector<PrintedRelation>& out, std::vector<PrintedRelation> more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

std::vector<PrintedRelation> com1_relations() {
  return table("Com1", {"[L1,L2] = -i L3", "[L2,L3] = -i L1", "[L3,L1] = -i L2",
                        "[B1,B2] = i L3",  "[B2,B3] = i L1",  "[B3,B1] = i L2",
                        "[L1,B1] = 0",     "[L2,B2] = 0",     "[L3,B3] = 0",
                        "[L1,B2] = -i B3", "[L1,B3] = i B2",
                        "[L2,B3] = -i B1", "[L2,B1] = i B3",
                        "[L3,B1] = -i B2", "[L3,B2] = i B1"});
}

std::vector<PrintedRelation> hydrogen_epsilon_relations() {
  const std::string src = "hydrogen i-epsilon";
  std::vector<PrintedRelation> out;
  epsilon(out, src, "L", "");
  append(out, table(src, {"[L1,A2] = i A3", "[L2,A3] = i A1", "[L3,A1] = i A2",
                          "[L2,A1] = -i A3", "[L3,A2] = -i A1", "[L1,A3] = -i A2"}));
  append(out, table(src, {"[A1,A2] = i L3", "[A2,A3] = i L1", "[A3,A1] = i L2"}));
  append(out, table(src, {"[L1,Δ1] = 0", "[L2,Δ2] = 0", "[L3,Δ3] = 0"}));
  append(out, table(src, {"[Δ2,A1] = i B1", "[Δ2,A2] = i B2", "[Δ2,A3] = i B3"}));
  append(out, table(src, {"[Δ1,A1] = i Γ1", "[Δ1,A2] = i Γ2", "[Δ1,A3] = i Γ3"}));
  return out;
}

std::vector<PrintedRelation> shell_relations() {
  const std::string src = "sl2c shell";
  std::vector<PrintedRelation> out;
  epsilon(out, src, "X", "-");
  epsilon(out, src, "Y", "-");
  zeros(out, src, "X", "Y", {"1", "2", "3"});
  return out;
}

std::vector<PrintedRelation> per2s_relations() { return cw_rows("Per2s", "X", "3", "-", "", "-2"); }

std::vector<PrintedRelation> per3s_relations() { return cw_rows("Per3s", "Y", "3", "-", "", "-2"); }

std::vector<PrintedRelation> so4_epsilon_relations() {
  const std::string src = "so4 i-epsilon";
  std::vector<PrintedRelation> out;
  zeros(out, src, "K", "J", {"1", "2", "3"});
  epsilon(out, src, "K", "");
  epsilon(out, src, "J", "");
  return out;
}

std::vector<PrintedRelation> jkcom_relations() {
  std::vector<PrintedRelation> out = cw_rows("JKCom", "K", "3", "", "-", "2");
  append(out, cw_rows("JKCom", "J", "3", "", "-", "2"));
  zeros(out, "JKCom", "K", "J", {"+", "-", "3"});
  return out;
}

std::vector<PrintedRelation> so21_ts_relations() {
  const std::string src = "so21 T/S";
  std::vector<PrintedRelation> out;
  zeros(out, src, "T", "S", {"0", "1", "2"});
  append(out, table(src, {"[T1,T2] = i T0", "[T2,T0] = -i T1", "[T0,T1] = -i T2"}));
  append(out, table(src, {"[S1,S2] = i S0", "[S2,S0] = -i S1", "[S0,S1] = -i S2"}));
  return out;
}

std::vector<PrintedRelation> so22_ts_relations() {
  const std::string src = "so22 T/S";
  std::vector<PrintedRelation> out = cw_rows(src, "T", "0", "-", "", "-2");
  append(out, cw_rows(src, "S", "0", "-", "", "-2"));
  zeros(out, src, "T", "S", {"+", "-", "0"});
  return out;
}

std::vector<PrintedRelation> so21_pq_relations() {
  const std::string src = "so21 P/Q";
  std::vector<PrintedRelation> out;
  append(out, table(src, {"[P1,P2] = i P0", "[P2,P0] = -i P1", "[P0,P1] = -i P2"}));
  append(out, table(src, {"[Q1,Q2] = i Q0", "[Q2,Q0] = -i Q1", "[Q0,Q1] = -i Q2"}));
  zeros(out, src, "P", "Q", {"0", "1", "2"});
  return out;
}

std::vector<PrintedRelation> so22_pq_relations() {
  const std::string src = "so22 P/Q";
  std::vector<PrintedRelation> out = table(src, {"[P0,P+] = -P+", "[P0,P-] = P-", "[P+,T-] = -2 P0"});
  append(out, cw_rows(src, "Q", "0", "-", "", "-2"));
  zeros(out, src, "P", "Q", {"+", "-", "0"});
  return out;
}

std::vector<PrintedRelation> cb1_relations() {
  const std::string src = "CB1";
  std::vector<PrintedRelation> out;
  append(out, table(src, {"[1K1,1K2] = -i 1K2", "[1K2,1K3] = -i 1K1", "[1K3,1K1] = -i 1K2",
                          "[1J1,1J2] = -i 1J2", "[1J2,1J3] = -i 1J1", "[1J3,1J1] = -i 1J2"}));
  zeros(out, src, "1K", "1J", {"1", "2", "3"});
  append(out, table(src, {"[1T1,1T2] = i 1T2", "[1T2,1T0] = -i 1T1", "[1T0,1T1] = -i 1T2",
                          "[1S1,1S2] = i 1S2", "[1S2,1S0] = -i 1S1", "[1S0,1S1] = -i 1S2"}));
  zeros(out, src, "1T", "1S", {"0", "1", "2"});
  append(out, table(src, {"[1P1,1P2] = i 1P2", "[1P2,1P0] = -i 1P1", "[1P0,1P1] = -i 1P2",
                          "[1Q1,1Q2] = i 1Q2", "[1Q2,1Q0] = -i 1Q1", "[1Q0,1Q1] = -i 1Q2"}));
  zeros(out, src, "1P", "1Q", {"0", "1", "2"});
  return out;
}

std::vector<PrintedRelation> cb2_relations() {
  const std::string src = "CB2";
  std::vector<PrintedRelation> out;
  append(out, table(src, {"[2K1,2K2] = i 2K2", "[2K2,2K3] = i 2K1", "[2K3,2K1] = i 2K2",
                          "[2J1,2J2] = i 2J2", "[2J2,2J3] = i 2J1", "[2J3,2J1] = i 2J2"}));
  zeros(out, src, "2K", "2J", {"1", "2", "3"});
  append(out, table(src, {"[2T1,2T2] = -i 2T2", "[2T2,2T0] = i 2T1", "[2T0,2T1] = i 2T2",
                          "[2S1,2S2] = -i 2S2", "[2S2,2S0] = i 2S1", "[2S0,2S1] = i 2S2"}));
  zeros(out, src, "2T", "2S", {"0", "1", "2"});
  append(out, table(src, {"[2P1,2P2] = -i 2P2", "[2P2,2P0] = i 2P1", "[2P0,2P1] = i 2P2",
                          "[2Q1,2Q2] = -i 2Q2", "[2Q2,2Q0] = i 2Q1", "[2Q0,2Q1] = i 2Q2"}));
  zeros(out, src, "2P", "2Q", {"0", "1", "2"});
  return out;
}

std::vector<PrintedRelation> syb1_relations() {
  const std::string src = "SYB1";
  std::vector<PrintedRelation> out = table(src, {"[1K3,1K+] = 1K+", "[1K3,1K-] = -1K-", "[1K+,1K-] = 2 1K3",
                                                 "[1J3,1J+] = 1J+", "[1J3,1J-] = -1J-", "[1J+,1J-] = 2 1J3"});
  zeros(out, src, "1K", "1J", {"+", "-", "3"});
  append(out, table(src, {"[1T0,1T+] = -1T+", "[1T0,1T-] = 1T-", "[1T+,1T-] = -2 1T0",
                          "[1S0,1S+] = -1S+", "[1S+,1S-] = 1S-", "[1S+,1S-] = -2 1S0"}));
  zeros(out, src, "1T", "1S", {"+", "-", "0"});
  append(out, table(src, {"[1P0,1P+] = -1P+", "[1P0,1P-] = 1P-", "[1P+,1P-] = -2 1P0",
                          "[1Q0,1Q+] = -1Q+", "[1Q0,1Q-] = 1Q-", "[1Q+,1Q-] = -2 1Q0"}));
  zeros(out, src, "1P", "1Q", {"+", "-", "0"});
  return out;
}

std::vector<PrintedRelation> syb2_relations() {
  const std::string src = "SYB2";
  std::vector<PrintedRelation> out = table(src, {"[2K3,2K+] = 2K+", "[2K3,2K-] = -2K-", "[2K+,2K-] = 2 2K3",
                                                 "[2J3,2J+] = 2J+", "[2J3,2J-] = -2J-", "[2J+,2J-] = 2 2J3"});
  zeros(out, src, "2K", "2J", {"+", "-", "3"});
  append(out, table(src, {"[2T0,2T+] = 2T+", "[2T0,2T-] = -2T-", "[2T+,2T-] = -2 2T0",
                          "[2S0,2S+] = 2S+", "[2S0,2S-] = -2S-", "[2S+,2S-] = -2 2S0"}));
  zeros(out, src, "2T", "2S", {"+", "-", "0"});
  append(out, table(src, {"[2P0,2P+] = 2P+", "[2P0,2P-] = -2P-", "[2P+,2P-] = -2 2P0",
                          "[2Q0,2Q+] = 2Q+", "[2Q0,2Q-] = -2Q-", "[2Q+,2Q-] = -2 2Q0"}));
  zeros(out, src, "2P", "2Q", {"+", "-", "0"});
  return out;
}

std::vector<PrintedRoot> printed_so42_roots() {
  return {{"K+", {1, 1, 0}},  {"K-", {-1, -1, 0}}, {"J+", {-1, 1, 0}}, {"J-", {1, -1, 0}},
          {"T+", {1, 0, 1}},  {"T-", {-1, 0, -1}}, {"S+", {-1, 0, 1}}, {"S-", {1, 0, -1}},
          {"P+", {0, 1, 1}},  {"P-", {0, -1, -1}}, {"Q+", {0, -1, 1}}, {"Q-", {0, 1, -1}},
          {"L3", {0, 0, 0}},  {"A3", {0, 0, 0}},   {"Δ3", {0, 0, 0}}};
}

std::vector<PrintedRoot> printed_rs1_roots() {
  return {{"1K+", {1, 1, 0}},  {"1K-", {-1, -1, 0}}, {"1J+", {-1, 1, 0}}, {"1J-", {1, -1, 0}},
          {"1T+", {1, 0, 1}},  {"1T-", {-1, 0, -1}}, {"1S+", {-1, 0, 1}}, {"1S-", {1, 0, -1}},
          {"1P+", {0, 1, 1}},  {"1P-", {0, -1, -1}}, {"1Q+", {0, -1, 1}}, {"1Q-", {0, 1, -1}}};
}

std::vector<PrintedRoot> printed_rs2_roots() {
  return {{"2K+", {1, -1, 0}}, {"2K-", {-1, 1, 0}},  {"2J+", {1, 1, 0}},   {"2J-", {-1, -1, 0}},
          {"2T+", {1, 0, -1}}, {"2T-", {-1, 0, 1}},  {"2S+", {1, 0, 1}},   {"2S-", {-1, 0, -1}},
          {"2P+", {0, 1, -1}}, {"2P-", {0, -1, 1}},  {"2Q+", {0, 1, 1}},   {"2Q-", {0, -1, -1}}};
}

}  // namespace lietab
