// Copyright 2026 The PStabilizer Authors
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

#include "pstab/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pstab {

Instructor make_gate(Gate g, std::uint32_t wire) {
    return Instructor{g, wire, 0, 0.0};
}

Instructor make_rotation(Gate g, std::uint32_t wire, double theta) {
    return Instructor{g, wire, 0, theta};
}

Instructor make_cx(std::uint32_t control, std::uint32_t target) {
    return Instructor{Gate::CX, control, target, 0.0};
}

std::size_t OperatorGroup::size() const {
    if (kind == GroupKind::CX) {
        return gates.size();
    }
    std::size_t total = 0;
    for (const auto& wire_gates : by_wire) {
        total += wire_gates.size();
    }
    return total;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char ch : line) {
        if (ch == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::optional<Gate> gate_from_name(const std::string& name) {
    if (name == "h") return Gate::H;
    if (name == "s") return Gate::S;
    if (name == "rx") return Gate::RX;
    if (name == "ry") return Gate::RY;
    if (name == "rz") return Gate::RZ;
    if (name == "cx") return Gate::CX;
    return std::nullopt;
}

std::uint64_t parse_uint(const std::string& token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        parse_fail(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

double parse_angle(const std::string& token, std::size_t line_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(token, &consumed);
        if (consumed != token.size()) {
            parse_fail(line_no, "trailing characters in angle '" + token + "'");
        }
        return value;
    } catch (const std::invalid_argument&) {
        parse_fail(line_no, "expected angle, got '" + token + "'");
    } catch (const std::out_of_range&) {
        parse_fail(line_no, "angle out of range '" + token + "'");
    }
}

std::uint32_t parse_wire(const std::string& token, std::size_t n_qubits, std::size_t line_no) {
    const std::uint64_t wire = parse_uint(token, line_no, "wire index");
    if (wire >= n_qubits) {
        parse_fail(line_no, "wire " + std::to_string(wire) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
    return static_cast<std::uint32_t>(wire);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                parse_fail(line_no, "expected 'qubits N' header");
            }
            const std::uint64_t n = parse_uint(tokens[1], line_no, "qubit count");
            if (n == 0) {
                parse_fail(line_no, "qubit count must be positive");
            }
            circuit.n_qubits = static_cast<std::size_t>(n);
            have_header = true;
            continue;
        }

        const std::optional<Gate> gate = gate_from_name(tokens[0]);
        if (!gate) {
            parse_fail(line_no, "unknown gate name '" + tokens[0] + "'");
        }
        if (*gate == Gate::CX) {
            if (tokens.size() != 3) {
                parse_fail(line_no, "cx expects two wires");
            }
            const std::uint32_t control = parse_wire(tokens[1], circuit.n_qubits, line_no);
            const std::uint32_t target = parse_wire(tokens[2], circuit.n_qubits, line_no);
            if (control == target) {
                parse_fail(line_no, "CX with equal wires");
            }
            circuit.instructors.push_back(make_cx(control, target));
        } else if (gate_is_rotation(*gate)) {
            if (tokens.size() != 3) {
                parse_fail(line_no, std::string(gate_name(*gate)) + " expects a wire and an angle");
            }
            const std::uint32_t wire = parse_wire(tokens[1], circuit.n_qubits, line_no);
            circuit.instructors.push_back(make_rotation(*gate, wire, parse_angle(tokens[2], line_no)));
        } else {
            if (tokens.size() != 2) {
                parse_fail(line_no, std::string(gate_name(*gate)) + " expects exactly one wire");
            }
            circuit.instructors.push_back(make_gate(*gate, parse_wire(tokens[1], circuit.n_qubits, line_no)));
        }
    }
    if (!have_header) {
        throw std::invalid_argument("line 1: missing 'qubits N' header");
    }
    return circuit;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_qubits << '\n';
    char angle[64];
    for (const Instructor& ins : c.instructors) {
        out << gate_name(ins.name) << ' ' << ins.wire;
        if (ins.name == Gate::CX) {
            out << ' ' << ins.wire2;
        } else if (gate_is_rotation(ins.name)) {
            std::snprintf(angle, sizeof(angle), "%.17g", ins.theta);
            out << ' ' << angle;
        }
        out << '\n';
    }
    return out.str();
}

Circuit generate_wchain_zxz(std::size_t n_qubits, std::size_t layers, std::size_t repeats,
                            std::uint64_t seed) {
    if (n_qubits < 2) {
        throw std::invalid_argument("generate_wchain_zxz: need at least 2 qubits");
    }
    if (layers < 1 || repeats < 1) {
        throw std::invalid_argument("generate_wchain_zxz: layers and repeats must be >= 1");
    }

    std::mt19937_64 rng(seed);
    // Top 53 bits -> [0, 1); stable across platforms, unlike
    // std::uniform_real_distribution.
    const auto angle = [&rng] {
        return 2.0 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    Circuit circuit;
    circuit.n_qubits = n_qubits;
    circuit.instructors.reserve(layers * ((n_qubits - 1) * 2 + repeats * 3 * n_qubits));
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (std::uint32_t j = 0; j + 1 < n_qubits; ++j) {
            circuit.instructors.push_back(make_rotation(Gate::RY, j, angle()));
        }
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            for (std::uint32_t j = 0; j < n_qubits; ++j) {
                circuit.instructors.push_back(make_rotation(Gate::RZ, j, angle()));
                circuit.instructors.push_back(make_rotation(Gate::RX, j, angle()));
                circuit.instructors.push_back(make_rotation(Gate::RZ, j, angle()));
            }
        }
        for (std::uint32_t j = 0; j + 1 < n_qubits; ++j) {
            circuit.instructors.push_back(make_cx(j, j + 1));
        }
    }
    return circuit;
}

namespace {

OperatorSequence split_with_runs(const Circuit& c, bool fuse_runs) {
    OperatorSequence seq;
    seq.n_qubits = c.n_qubits;

    const auto start_group = [&seq, &c](GroupKind kind) -> OperatorGroup& {
        OperatorGroup group;
        group.kind = kind;
        if (kind == GroupKind::NonCX) {
            group.index = seq.num_noncx++;
            group.by_wire.resize(c.n_qubits);
        } else {
            group.index = seq.num_cx++;
        }
        seq.groups.push_back(std::move(group));
        return seq.groups.back();
    };

    for (const Instructor& ins : c.instructors) {
        const GroupKind kind = ins.name == Gate::CX ? GroupKind::CX : GroupKind::NonCX;
        const bool open_new =
            seq.groups.empty() || seq.groups.back().kind != kind || !fuse_runs;
        OperatorGroup& group = open_new ? start_group(kind) : seq.groups.back();
        if (kind == GroupKind::CX) {
            group.gates.emplace_back(ins.wire, ins.wire2);
        } else {
            group.by_wire[ins.wire].push_back(ins);
        }
    }
    return seq;
}

}  // namespace

OperatorSequence split_operators(const Circuit& c) {
    return split_with_runs(c, true);
}

OperatorSequence split_gate_by_gate(const Circuit& c) {
    return split_with_runs(c, false);
}

std::vector<Instructor> flatten_sequence(const OperatorSequence& seq) {
    std::vector<Instructor> out;
    for (const OperatorGroup& group : seq.groups) {
        if (group.kind == GroupKind::CX) {
            for (const auto& [control, target] : group.gates) {
                out.push_back(make_cx(control, target));
            }
        } else {
            for (const auto& wire_gates : group.by_wire) {
                out.insert(out.end(), wire_gates.begin(), wire_gates.end());
            }
        }
    }
    return out;
}

}  // namespace pstab
