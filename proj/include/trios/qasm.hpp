// OpenQASM 2.0 reader and writer for the gate set this toolkit
// understands: one quantum register, an optional classical register,
// and the gates listed in circuit.hpp.

#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "trios/circuit.hpp"

namespace trios {

struct QasmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts the usual header, a single qreg, an optional single creg,
// gate applications with pi-expression or decimal angles, measure,
// and barrier.  Errors carry the 1-based source line.
Circuit parse_qasm(std::istream& in);
Circuit parse_qasm_string(const std::string& text);
Circuit parse_qasm_file(const std::string& path);

// Canonical form: registers named q/c, one statement per line, angles
// printed with 17 significant digits so values survive a round trip.
std::string serialize_qasm(const Circuit& circuit);
void write_qasm_file(const Circuit& circuit, const std::string& path);

}  // namespace trios
