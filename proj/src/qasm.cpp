// Copyright 2026 The qcmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcmp/qasm.hpp"

#include <cctype>
#include <charconv>
#include <regex>
#include <sstream>
#include <vector>

#include "qcmp/errors.hpp"

namespace qcmp {

namespace {

constexpr std::string_view kQubitReg = "q";
constexpr std::string_view kBitReg = "cr";

std::string condition_text(const ClassicalCondition& cond,
                           std::size_t num_clbits) {
  if (cond.covers_register(num_clbits)) {
    return std::string(kBitReg) + " == " + std::to_string(cond.value);
  }
  if (cond.clbits.size() == 1) {
    return std::string(kBitReg) + "[" + std::to_string(cond.clbits[0]) +
           "] == " + std::to_string(cond.value);
  }
  throw Error(ErrorCode::kUnsupportedInstruction,
              "condition over a partial multi-bit mask has no QASM form");
}

void write_statement(std::ostream& out, const Instruction& instr) {
  if (const auto* g = instr.as_gate()) {
    out << mnemonic(g->kind);
    for (std::size_t i = 0; i < g->targets.size(); ++i) {
      out << (i == 0 ? " " : ", ") << kQubitReg << '[' << g->targets[i] << ']';
    }
    out << ';';
  } else if (const auto* m = instr.as_measure()) {
    out << kBitReg << '[' << m->clbit << "] = measure " << kQubitReg << '['
        << m->qubit << "];";
  } else if (const auto* b = instr.as_barrier()) {
    out << "pragma block "
        << (b->marker == BlockMarker::kBegin ? "begin" : "end");
  }
}

enum class Tok { kIdent, kInt, kReal, kPunct, kPragma, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const std::vector<std::string>& comments() const { return comments_; }

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::kIdent;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          t.text.push_back(advance());
        }
        if (t.text == "pragma") {
          t.kind = Tok::kPragma;
          t.text.clear();
          while (pos_ < src_.size() && src_[pos_] != '\n') {
            t.text.push_back(advance());
          }
          trim(t.text);
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::kInt;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          t.text.push_back(advance());
        }
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          t.kind = Tok::kReal;
          t.text.push_back(advance());
          while (pos_ < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            t.text.push_back(advance());
          }
        }
      } else if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        t.kind = Tok::kPunct;
        t.text = "==";
        advance();
        advance();
      } else if (std::string_view("[];,=(){}").find(c) !=
                 std::string_view::npos) {
        t.kind = Tok::kPunct;
        t.text = std::string(1, advance());
      } else {
        throw SyntaxError(line_, col_, "a token", std::string(1, c));
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static void trim(std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    s.erase(0, i);
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        advance();
        advance();
        std::string text;
        while (pos_ < src_.size() && src_[pos_] != '\n') text.push_back(advance());
        trim(text);
        comments_.push_back(std::move(text));
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::vector<std::string> comments_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Circuit parse() {
    expect_ident("OPENQASM");
    if (peek().kind != Tok::kReal && peek().kind != Tok::kInt) {
      fail("a version number");
    }
    if (peek().text != "3.0" && peek().text != "3") fail("version 3.0");
    next();
    expect_punct(";");

    while (peek().kind == Tok::kIdent &&
           (peek().text == "qubit" || peek().text == "bit")) {
      parse_declaration();
    }
    circuit_ = Circuit(num_qubits_, num_clbits_);

    while (peek().kind != Tok::kEnd) parse_statement(/*inside_if=*/false);
    return std::move(circuit_);
  }

  // "// q[3] b_1" comments carry qubit labels; anything else is ignored.
  void apply_labels(const std::vector<std::string>& comments, Circuit& circuit) const {
    static const std::regex kLabel(R"(^([A-Za-z_]\w*)\[(\d+)\]\s+(\S+)$)");
    for (const auto& text : comments) {
      std::smatch m;
      if (!std::regex_match(text, m, kLabel) || m[1] != qubit_reg_) continue;
      const auto idx = std::stoull(m[2]);
      if (idx < num_qubits_) circuit.set_label(static_cast<QubitIndex>(idx), m[3]);
    }
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw SyntaxError(t.line, t.column, expected, t.text);
  }

  void expect_punct(std::string_view p) {
    if (peek().kind != Tok::kPunct || peek().text != p) {
      fail("'" + std::string(p) + "'");
    }
    next();
  }

  void expect_ident(std::string_view word) {
    if (peek().kind != Tok::kIdent || peek().text != word) {
      fail("'" + std::string(word) + "'");
    }
    next();
  }

  std::string expect_name() {
    if (peek().kind != Tok::kIdent) fail("an identifier");
    return next().text;
  }

  std::uint64_t expect_int() {
    if (peek().kind != Tok::kInt) fail("an integer");
    const Token& t = peek();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) {
      throw Error(ErrorCode::kValueTooLarge,
                  position(t) + "integer '" + t.text + "' out of range");
    }
    next();
    return v;
  }

  static std::string position(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
  }

  void parse_declaration() {
    const Token kw = next();
    expect_punct("[");
    const std::uint64_t size = expect_int();
    expect_punct("]");
    const Token name_tok = peek();
    const std::string name = expect_name();
    expect_punct(";");
    if (kw.text == "qubit") {
      if (!qubit_reg_.empty()) {
        throw Error(ErrorCode::kUnsupportedInstruction,
                    position(kw) + "only one qubit register is supported");
      }
      qubit_reg_ = name;
      num_qubits_ = size;
    } else {
      if (!bit_reg_.empty()) {
        throw Error(ErrorCode::kUnsupportedInstruction,
                    position(kw) + "only one bit register is supported");
      }
      bit_reg_ = name;
      num_clbits_ = size;
    }
    if (!qubit_reg_.empty() && qubit_reg_ == bit_reg_) {
      throw Error(ErrorCode::kUnsupportedInstruction,
                  position(name_tok) + "register '" + name + "' declared twice");
    }
  }

  // reg[index] with the register checked against the expected kind.
  std::uint32_t parse_indexed(bool qubit) {
    const Token reg_tok = peek();
    const std::string reg = expect_name();
    const std::string& declared = qubit ? qubit_reg_ : bit_reg_;
    if (reg != declared) {
      throw Error(ErrorCode::kUndeclaredRegister,
                  position(reg_tok) + (qubit ? "qubit" : "bit") +
                      " register '" + reg + "' is not declared");
    }
    expect_punct("[");
    const Token idx_tok = peek();
    const std::uint64_t idx = expect_int();
    expect_punct("]");
    const std::size_t bound = qubit ? num_qubits_ : num_clbits_;
    if (idx >= bound) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  position(idx_tok) + reg + "[" + std::to_string(idx) +
                      "] is out of range for size " + std::to_string(bound));
    }
    return static_cast<std::uint32_t>(idx);
  }

  void parse_statement(bool inside_if,
                       const std::optional<ClassicalCondition>& cond = {}) {
    const Token& t = peek();
    if (t.kind == Tok::kPragma) {
      if (inside_if) fail("a gate statement");
      if (t.text == "block begin") {
        circuit_.append(Instruction::barrier(BlockMarker::kBegin));
      } else if (t.text == "block end") {
        circuit_.append(Instruction::barrier(BlockMarker::kEnd));
      } else {
        fail("'block begin' or 'block end'");
      }
      next();
      return;
    }
    if (t.kind != Tok::kIdent) fail("a statement");

    if (t.text == "if") {
      if (inside_if) fail("a gate statement");
      parse_if();
      return;
    }
    if (auto kind = gate_kind_from_mnemonic(t.text)) {
      next();
      std::vector<QubitIndex> targets;
      for (std::size_t i = 0; i < arity(*kind); ++i) {
        if (i > 0) expect_punct(",");
        targets.push_back(parse_indexed(/*qubit=*/true));
      }
      expect_punct(";");
      append_checked(t, Instruction::gate(*kind, std::move(targets), cond));
      return;
    }
    if (t.text == bit_reg_ && !bit_reg_.empty()) {
      if (inside_if) {
        throw Error(ErrorCode::kUnsupportedInstruction,
                    position(t) + "measurements cannot be conditioned");
      }
      const Token start = t;
      const std::uint32_t clbit = parse_indexed(/*qubit=*/false);
      expect_punct("=");
      expect_ident("measure");
      const std::uint32_t qubit = parse_indexed(/*qubit=*/true);
      expect_punct(";");
      append_checked(start, Instruction::measure(qubit, clbit));
      return;
    }
    if (peek_is_punct(1, "[") && peek_is_punct(4, "=")) {
      throw Error(ErrorCode::kUndeclaredRegister,
                  position(t) + "bit register '" + t.text + "' is not declared");
    }
    fail("a gate name, measurement, 'if' or pragma");
  }

  bool peek_is_punct(std::size_t ahead, std::string_view p) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() && tokens_[i].kind == Tok::kPunct &&
           tokens_[i].text == p;
  }

  void parse_if() {
    next();  // 'if'
    expect_punct("(");
    const Token reg_tok = peek();
    const std::string reg = expect_name();
    if (reg != bit_reg_ || bit_reg_.empty()) {
      throw Error(ErrorCode::kUndeclaredRegister,
                  position(reg_tok) + "bit register '" + reg +
                      "' is not declared");
    }
    ClassicalCondition cond;
    std::size_t width = num_clbits_;
    if (peek().kind == Tok::kPunct && peek().text == "[") {
      next();
      const Token idx_tok = peek();
      const std::uint64_t idx = expect_int();
      expect_punct("]");
      if (idx >= num_clbits_) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    position(idx_tok) + "clbit " + std::to_string(idx) +
                        " out of range");
      }
      cond.clbits = {static_cast<ClbitIndex>(idx)};
      width = 1;
    } else {
      cond = ClassicalCondition::register_equals(num_clbits_, 0);
    }
    expect_punct("==");
    const Token value_tok = peek();
    cond.value = expect_int();
    if (width < 64 && cond.value >= (std::uint64_t{1} << width)) {
      throw Error(ErrorCode::kValueTooLarge,
                  position(value_tok) + "value " + std::to_string(cond.value) +
                      " does not fit in " + std::to_string(width) + " bits");
    }
    expect_punct(")");
    expect_punct("{");
    while (!(peek().kind == Tok::kPunct && peek().text == "}")) {
      if (peek().kind == Tok::kEnd) fail("'}'");
      parse_statement(/*inside_if=*/true, cond);
    }
    next();
  }

  void append_checked(const Token& at, Instruction instr) {
    try {
      circuit_.append(std::move(instr));
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.code(), position(at) + e.what());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string qubit_reg_;
  std::string bit_reg_;
  std::size_t num_qubits_ = 0;
  std::size_t num_clbits_ = 0;
  Circuit circuit_;
};

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "qubit[" << circuit.num_qubits() << "] " << kQubitReg << ";\n";
  if (circuit.num_clbits() > 0) {
    out << "bit[" << circuit.num_clbits() << "] " << kBitReg << ";\n";
  }
  for (const auto& [q, name] : circuit.labels()) {
    out << "// " << kQubitReg << '[' << q << "] " << name << '\n';
  }

  const auto& instrs = circuit.instructions();
  for (std::size_t i = 0; i < instrs.size();) {
    const auto& cond = instrs[i].condition;
    if (!cond) {
      write_statement(out, instrs[i]);
      out << '\n';
      ++i;
      continue;
    }
    out << "if (" << condition_text(*cond, circuit.num_clbits()) << ") {\n";
    while (i < instrs.size() && instrs[i].condition == cond) {
      out << "  ";
      write_statement(out, instrs[i]);
      out << '\n';
      ++i;
    }
    out << "}\n";
  }
  return out.str();
}

Circuit parse_qasm(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  Circuit circuit = parser.parse();
  parser.apply_labels(lexer.comments(), circuit);
  return circuit;
}

}  // namespace qcmp
