#include "trios/qasm.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace trios {

namespace {

struct Token {
  std::string text;
  int line;
};

// Splits the source into identifier, number, and symbol tokens,
// dropping // comments.  Statements are later cut at ';'.
std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find("//");
    if (comment != std::string::npos) line.resize(comment);
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i + 1;
        while (j < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[j])) ||
                line[j] == '_')) {
          ++j;
        }
        tokens.push_back({line.substr(i, j - i), line_no});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::size_t j = i + 1;
        while (j < line.size() &&
               (std::isdigit(static_cast<unsigned char>(line[j])) ||
                line[j] == '.' || line[j] == 'e' || line[j] == 'E' ||
                ((line[j] == '+' || line[j] == '-') &&
                 (line[j - 1] == 'e' || line[j - 1] == 'E')))) {
          ++j;
        }
        tokens.push_back({line.substr(i, j - i), line_no});
        i = j;
        continue;
      }
      if (c == '"') {
        const auto close = line.find('"', i + 1);
        if (close == std::string::npos) {
          throw QasmError("line " + std::to_string(line_no) +
                          ": unterminated string");
        }
        tokens.push_back({line.substr(i, close - i + 1), line_no});
        i = close + 1;
        continue;
      }
      if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
        tokens.push_back({"->", line_no});
        i += 2;
        continue;
      }
      if (std::string("[](),;*/+-").find(c) != std::string::npos) {
        tokens.push_back({std::string(1, c), line_no});
        ++i;
        continue;
      }
      throw QasmError("line " + std::to_string(line_no) +
                      ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  return tokens;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw QasmError("line " + std::to_string(line) + ": " + message);
}

// One ';'-terminated statement.
struct Statement {
  std::vector<Token> tokens;
  int line() const { return tokens.empty() ? 0 : tokens.front().line; }
};

class StatementParser {
 public:
  explicit StatementParser(const Statement& s) : s_(s) {}

  bool done() const { return pos_ >= s_.tokens.size(); }

  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : s_.tokens[pos_].text;
  }

  std::string next(const char* what) {
    if (done()) fail(s_.line(), std::string("expected ") + what);
    return s_.tokens[pos_++].text;
  }

  void expect(const std::string& text) {
    const std::string got = next(text.c_str());
    if (got != text) {
      fail(s_.line(), "expected '" + text + "', got '" + got + "'");
    }
  }

  bool accept(const std::string& text) {
    if (!done() && peek() == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  int integer(const char* what) {
    const std::string t = next(what);
    try {
      std::size_t used = 0;
      const int value = std::stoi(t, &used);
      if (used != t.size() || value < 0) throw std::invalid_argument(t);
      return value;
    } catch (const std::exception&) {
      fail(s_.line(), std::string("expected non-negative integer for ") + what +
                          ", got '" + t + "'");
    }
  }

  // angle := product (('*'|'/') product)*, product := ['-'] (num | pi)
  double angle() {
    double value = factor();
    while (!done() && (peek() == "*" || peek() == "/")) {
      const std::string op = next("operator");
      const double rhs = factor();
      if (op == "*") {
        value *= rhs;
      } else {
        if (rhs == 0.0) fail(s_.line(), "division by zero in angle");
        value /= rhs;
      }
    }
    return value;
  }

  int line() const { return s_.line(); }

 private:
  double factor() {
    double sign = 1.0;
    while (accept("-")) sign = -sign;
    const std::string t = next("angle term");
    if (t == "pi") return sign * std::numbers::pi;
    try {
      std::size_t used = 0;
      const double value = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return sign * value;
    } catch (const std::exception&) {
      fail(s_.line(), "bad angle term '" + t + "'");
    }
  }

  const Statement& s_;
  std::size_t pos_ = 0;
};

const std::map<std::string, GateKind>& gate_table() {
  static const std::map<std::string, GateKind> table = {
      {"h", GateKind::H},     {"x", GateKind::X},     {"t", GateKind::T},
      {"tdg", GateKind::Tdg}, {"u1", GateKind::U1},   {"u2", GateKind::U2},
      {"u3", GateKind::U3},   {"rz", GateKind::RZ},   {"rx", GateKind::RX},
      {"cx", GateKind::CX},   {"cu1", GateKind::CU1}, {"swap", GateKind::SWAP},
      {"ccx", GateKind::CCX},
  };
  return table;
}

}  // namespace

Circuit parse_qasm(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  std::vector<Statement> statements;
  Statement current;
  for (const Token& t : tokens) {
    if (t.text == ";") {
      if (!current.tokens.empty()) {
        statements.push_back(std::move(current));
        current = {};
      }
      continue;
    }
    current.tokens.push_back(t);
  }
  if (!current.tokens.empty()) {
    fail(current.line(), "missing ';' after '" + current.tokens.front().text +
                             "' statement");
  }

  Circuit circuit;
  std::string qreg_name, creg_name;
  int qreg_size = -1, creg_size = -1;
  bool saw_header = false;

  auto qubit_ref = [&](StatementParser& p) {
    const std::string reg = p.next("qubit reference");
    if (qreg_size < 0) fail(p.line(), "qreg must be declared before use");
    if (reg != qreg_name) fail(p.line(), "unknown register '" + reg + "'");
    p.expect("[");
    const int idx = p.integer("qubit index");
    p.expect("]");
    if (idx >= qreg_size) {
      fail(p.line(), "qubit index " + std::to_string(idx) +
                         " exceeds qreg size " + std::to_string(qreg_size));
    }
    return idx;
  };

  for (const Statement& s : statements) {
    StatementParser p(s);
    const std::string head = p.next("statement");

    if (head == "OPENQASM") {
      p.next("version");
      saw_header = true;
      continue;
    }
    if (head == "include") {
      p.next("file name");
      continue;
    }
    if (!saw_header) fail(p.line(), "missing OPENQASM 2.0 header");

    if (head == "qreg" || head == "creg") {
      const std::string name = p.next("register name");
      p.expect("[");
      const int size = p.integer("register size");
      p.expect("]");
      if (!p.done()) fail(p.line(), "trailing tokens after register");
      if (head == "qreg") {
        if (qreg_size >= 0) fail(p.line(), "only one qreg is supported");
        if (size < 1) fail(p.line(), "qreg must hold at least one qubit");
        qreg_name = name;
        qreg_size = size;
        circuit = Circuit(size);
      } else {
        if (creg_size >= 0) fail(p.line(), "only one creg is supported");
        creg_name = name;
        creg_size = size;
        circuit.set_n_clbits(size);
      }
      continue;
    }

    if (head == "measure") {
      const int q = qubit_ref(p);
      p.expect("->");
      const std::string reg = p.next("classical reference");
      if (creg_size < 0) fail(p.line(), "measure needs a declared creg");
      if (reg != creg_name) fail(p.line(), "unknown register '" + reg + "'");
      p.expect("[");
      const int c = p.integer("classical index");
      p.expect("]");
      if (c >= creg_size) {
        fail(p.line(), "classical index " + std::to_string(c) +
                           " exceeds creg size " + std::to_string(creg_size));
      }
      if (!p.done()) fail(p.line(), "trailing tokens after measure");
      circuit.measure(q, c);
      continue;
    }

    if (head == "barrier") {
      // whole-register and per-qubit forms both become the full-width
      // barrier of the IR
      if (qreg_size < 0) fail(p.line(), "qreg must be declared before use");
      if (!p.done()) {
        do {
          const std::string reg = p.next("qubit reference");
          if (reg != qreg_name) {
            fail(p.line(), "unknown register '" + reg + "'");
          }
          if (p.accept("[")) {
            p.integer("qubit index");
            p.expect("]");
          }
        } while (p.accept(","));
        if (!p.done()) fail(p.line(), "trailing tokens after barrier");
      }
      circuit.barrier();
      continue;
    }

    const auto it = gate_table().find(head);
    if (it == gate_table().end()) {
      fail(p.line(), "unknown gate '" + head + "'");
    }
    const GateKind kind = it->second;

    std::vector<double> params;
    if (p.accept("(")) {
      if (!p.accept(")")) {
        do {
          params.push_back(p.angle());
        } while (p.accept(","));
        p.expect(")");
      }
    }
    if (static_cast<int>(params.size()) != param_count(kind)) {
      fail(p.line(), "'" + head + "' expects " +
                         std::to_string(param_count(kind)) +
                         " parameter(s), got " + std::to_string(params.size()));
    }

    std::vector<int> qubits;
    do {
      qubits.push_back(qubit_ref(p));
    } while (p.accept(","));
    if (!p.done()) fail(p.line(), "trailing tokens after gate");

    try {
      circuit.append(kind, std::move(qubits), std::move(params));
    } catch (const CircuitError& e) {
      fail(p.line(), e.what());
    }
  }

  if (qreg_size < 0) throw QasmError("no qreg declared");
  return circuit;
}

Circuit parse_qasm_string(const std::string& text) {
  std::istringstream in(text);
  return parse_qasm(in);
}

Circuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QasmError("cannot open " + path);
  return parse_qasm(in);
}

namespace {

std::string format_angle(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

std::string serialize_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  if (circuit.n_clbits() > 0) {
    out << "creg c[" << circuit.n_clbits() << "];\n";
  }
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::Measure) {
      out << "measure q[" << g.qubits[0] << "] -> c[" << g.cbit << "];\n";
      continue;
    }
    if (g.kind == GateKind::Barrier) {
      out << "barrier q;\n";
      continue;
    }
    out << gate_name(g.kind);
    if (!g.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i > 0) out << ',';
        out << format_angle(g.params[i]);
      }
      out << ')';
    }
    out << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i > 0) out << ',';
      out << "q[" << g.qubits[i] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

void write_qasm_file(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw QasmError("cannot open " + path + " for writing");
  out << serialize_qasm(circuit);
  if (!out) throw QasmError("failed writing " + path);
}

}  // namespace trios
