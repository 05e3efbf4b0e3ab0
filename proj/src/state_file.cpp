// Copyright 2026 The globent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "globent/state_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace globent {

namespace {

constexpr double kNormTolerance = 1e-9;

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw StateFileError("line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    fail(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

}  // namespace

StateVector parse_state_file(std::string_view text, bool renormalize) {
  enum class Expect { kMagic, kQubits, kRecords } expect = Expect::kMagic;
  unsigned n = 0;
  std::vector<Complex> amps;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    switch (expect) {
      case Expect::kMagic:
        if (tok[0] != "PSI") fail(line_no, "missing 'PSI' header");
        if (tok.size() != 2) fail(line_no, "header must be 'PSI 1'");
        if (tok[1] != "1") fail(line_no, "unsupported version '" + std::string(tok[1]) + "'");
        expect = Expect::kQubits;
        break;
      case Expect::kQubits: {
        if (tok.size() != 2 || tok[0] != "n") fail(line_no, "expected 'n <qubits>'");
        n = parse_number<unsigned>(tok[1], line_no, "qubit count");
        if (n < 1 || n > kMaxQubits) {
          fail(line_no, "qubit count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxQubits));
        }
        amps.assign(std::size_t{1} << n, Complex{0.0, 0.0});
        seen.assign(amps.size(), false);
        expect = Expect::kRecords;
        break;
      }
      case Expect::kRecords: {
        if (tok.size() != 3) fail(line_no, "expected '<index> <re> <im>'");
        const auto index = parse_number<unsigned long long>(tok[0], line_no, "index");
        if (index >= amps.size()) {
          fail(line_no, "index " + std::to_string(index) + " out of range for n = " +
                            std::to_string(n));
        }
        if (seen[index]) fail(line_no, "duplicate index " + std::to_string(index));
        const double re = parse_number<double>(tok[1], line_no, "real part");
        const double im = parse_number<double>(tok[2], line_no, "imaginary part");
        if (!std::isfinite(re) || !std::isfinite(im)) fail(line_no, "non-finite amplitude");
        seen[index] = true;
        amps[index] = Complex(re, im);
        break;
      }
    }
  }
  if (expect == Expect::kMagic) throw StateFileError("empty input: missing 'PSI 1' header");
  if (expect == Expect::kQubits) throw StateFileError("missing 'n <qubits>' line");
  const double norm = norm_squared(amps);
  if (norm == 0.0) throw StateFileError("all amplitudes are zero");
  if (!renormalize && std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "squared norm " << norm << " differs from 1 by more than 1e-9";
    throw StateFileError(msg.str());
  }
  return from_amplitudes(n, std::move(amps), renormalize);
}

std::string format_state_file(const StateVector& state) {
  std::string out = "PSI 1\nn " + std::to_string(state.num_qubits()) + "\n";
  const auto amps = state.amplitudes();
  out.reserve(out.size() + amps.size() * 48);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    append_double(out, amps[i].real());
    out += ' ';
    append_double(out, amps[i].imag());
    out += '\n';
  }
  return out;
}

StateVector read_state_file(const std::filesystem::path& path, bool renormalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_state_file(buf.str(), renormalize);
  } catch (const StateFileError& e) {
    throw StateFileError(path.string() + ": " + e.what());
  }
}

void write_state_file(const std::filesystem::path& path, const StateVector& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFileError("cannot write " + path.string());
  out << format_state_file(state);
  if (!out) throw StateFileError("write failed for " + path.string());
}

}  // namespace globent
