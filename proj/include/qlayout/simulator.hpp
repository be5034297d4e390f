#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "qlayout/qasm.hpp"

namespace qlayout {

using Amplitude = std::complex<double>;

/// Evaluates a gate parameter: numbers, `pi`, + - * / ^, parentheses and
/// sin cos tan exp ln sqrt. Throws Error.
double eval_param(std::string_view expr);

/// Splits a parameter list at top-level commas.
std::vector<std::string> split_params(std::string_view params);

/// True when the simulator knows the gate's semantics.
bool gate_supported(const Gate& gate);

/// Wire w is bit w of the amplitude index.
class Statevector {
 public:
  explicit Statevector(std::size_t num_wires, std::size_t basis_index = 0);

  std::size_t num_wires() const { return num_wires_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm() const;

  /// `wire_of[q]` is the wire carrying circuit qubit q. Throws Error on an
  /// unsupported gate.
  void apply(const Gate& gate, const std::vector<std::size_t>& wire_of);
  void run(const Circuit& circuit, const std::vector<std::size_t>& wire_of);

 private:
  void apply_1q(std::size_t w, const Amplitude m[2][2]);
  void apply_cx(std::size_t c, std::size_t t);
  void apply_swap(std::size_t a, std::size_t b);

  std::size_t num_wires_;
  std::vector<Amplitude> amps_;
};

/// Inverse circuit over supported gates. Throws Error otherwise.
Circuit inverse(const Circuit& circuit);

}  // namespace qlayout
