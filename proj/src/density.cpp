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

#include "pstab/density.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <utility>
#include <variant>

#include "pstab/composer.hpp"
#include "pstab/exec.hpp"

namespace pstab {

namespace {

// Row-sparse partial sum used inside the add tree until fill-in forces the
// dense form. Rows keep their (col, val) entries sorted by column.
struct SparseSum {
    std::size_t dim = 0;
    std::size_t nnz = 0;
    std::vector<std::vector<std::pair<std::uint64_t, std::complex<double>>>> rows;

    static SparseSum from_term(const SparsePauliMatrix& term) {
        SparseSum s;
        s.dim = term.dim();
        s.nnz = s.dim;
        s.rows.resize(s.dim);
        for (std::size_t r = 0; r < s.dim; ++r) {
            s.rows[r].push_back({term.cols[r], term.vals[r]});
        }
        return s;
    }

    Eigen::MatrixXcd densify() const {
        Eigen::MatrixXcd dense =
            Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::size_t r = 0; r < dim; ++r) {
            for (const auto& [col, val] : rows[r]) {
                dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) += val;
            }
        }
        return dense;
    }
};

using AddNode = std::variant<SparseSum, Eigen::MatrixXcd>;

AddNode merge_nodes(AddNode a, AddNode b) {
    if (std::holds_alternative<SparseSum>(a) && std::holds_alternative<SparseSum>(b)) {
        SparseSum& lhs = std::get<SparseSum>(a);
        const SparseSum& rhs = std::get<SparseSum>(b);
        SparseSum merged;
        merged.dim = lhs.dim;
        merged.rows.resize(merged.dim);
        for (std::size_t r = 0; r < merged.dim; ++r) {
            auto& out = merged.rows[r];
            const auto& x = lhs.rows[r];
            const auto& y = rhs.rows[r];
            out.reserve(x.size() + y.size());
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < x.size() || j < y.size()) {
                if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                    out.push_back(x[i++]);
                } else if (i == x.size() || y[j].first < x[i].first) {
                    out.push_back(y[j++]);
                } else {
                    out.push_back({x[i].first, x[i].second + y[j].second});
                    ++i;
                    ++j;
                }
            }
            merged.nnz += out.size();
        }
        if (merged.nnz * 2 <= merged.dim * merged.dim) {
            return merged;
        }
        return merged.densify();
    }

    const auto to_dense = [](AddNode&& node) -> Eigen::MatrixXcd {
        if (std::holds_alternative<Eigen::MatrixXcd>(node)) {
            return std::get<Eigen::MatrixXcd>(std::move(node));
        }
        return std::get<SparseSum>(node).densify();
    };
    return to_dense(std::move(a)) + to_dense(std::move(b));
}

}  // namespace

Eigen::MatrixXcd add_terms(const StabilizerState& s) {
    const std::size_t dim = std::size_t{1} << s.n_qubits;

    // The identity is itself a term (string index 0 with weight 1).
    std::vector<AddNode> nodes;
    nodes.emplace_back(SparseSum::from_term(compose_sparse(1.0, 0, s.n_qubits)));
    for (StringIndex i = 0; i < s.lambda.size(); ++i) {
        if (s.lambda[i] != 0.0) {
            nodes.emplace_back(SparseSum::from_term(compose_sparse(s.lambda[i], i, s.n_qubits)));
        }
    }

    // Pairwise tree; levels are barriers, pairs within a level independent.
    while (nodes.size() > 1) {
        const std::size_t pairs = nodes.size() / 2;
        std::vector<AddNode> next(pairs + nodes.size() % 2);
        exec::parallel_for(pairs, 4, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                next[p] = merge_nodes(std::move(nodes[2 * p]), std::move(nodes[2 * p + 1]));
            }
        });
        if (nodes.size() % 2 == 1) {
            next.back() = std::move(nodes.back());
        }
        nodes = std::move(next);
    }

    if (std::holds_alternative<Eigen::MatrixXcd>(nodes[0])) {
        return std::get<Eigen::MatrixXcd>(std::move(nodes[0]));
    }
    return std::get<SparseSum>(nodes[0]).densify();
}

Eigen::MatrixXcd multiply_chain(std::vector<Eigen::MatrixXcd> ms) {
    if (ms.empty()) {
        throw std::invalid_argument("multiply_chain: empty chain");
    }
    const Eigen::Index dim = ms.front().rows();
    for (const auto& m : ms) {
        if (m.rows() != dim || m.cols() != dim) {
            throw std::invalid_argument("multiply_chain: shape mismatch");
        }
    }
    while (ms.size() > 1) {
        const std::size_t pairs = ms.size() / 2;
        std::vector<Eigen::MatrixXcd> next(pairs + ms.size() % 2);
        exec::parallel_for(pairs, 1, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                next[p] = ms[2 * p] * ms[2 * p + 1];
            }
        });
        if (ms.size() % 2 == 1) {
            next.back() = std::move(ms.back());
        }
        ms = std::move(next);
    }
    return std::move(ms[0]);
}

DensityMatrix to_density(const std::vector<StabilizerState>& stabs) {
    if (stabs.empty()) {
        throw std::invalid_argument("to_density: no stabilizers");
    }
    const std::size_t n = stabs.front().n_qubits;
    std::vector<Eigen::MatrixXcd> factors(stabs.size());
    exec::parallel_for(stabs.size(), 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            factors[j] = add_terms(stabs[j]);
        }
    });

    DensityMatrix rho;
    rho.n_qubits = n;
    rho.rho = multiply_chain(std::move(factors)) / static_cast<double>(std::uint64_t{1} << n);
    return rho;
}

double measure_z(const DensityMatrix& rho, std::size_t wire) {
    if (wire >= rho.n_qubits) {
        throw std::out_of_range("measure_z: wire out of range");
    }
    // tr([ (I + Z_wire) / 2 ] rho) = sum of diagonal entries whose wire bit
    // is 0.
    const std::uint64_t bit = std::uint64_t{1} << (rho.n_qubits - 1 - wire);
    double p = 0.0;
    for (Eigen::Index r = 0; r < rho.rho.rows(); ++r) {
        if ((static_cast<std::uint64_t>(r) & bit) == 0) {
            p += rho.rho(r, r).real();
        }
    }
    return p;
}

double rho00(const DensityMatrix& rho) {
    return rho.rho(0, 0).real();
}

std::string density_to_csv(const DensityMatrix& rho) {
    std::string out = "row,col,re,im\n";
    out.reserve(out.size() + static_cast<std::size_t>(rho.rho.size()) * 48);
    char line[128];
    for (Eigen::Index r = 0; r < rho.rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < rho.rho.cols(); ++c) {
            const std::complex<double> v = rho.rho(r, c);
            std::snprintf(line, sizeof(line), "%lld,%lld,%.17g,%.17g\n",
                          static_cast<long long>(r), static_cast<long long>(c), v.real(), v.imag());
            out += line;
        }
    }
    return out;
}

std::vector<std::byte> density_to_binary(const DensityMatrix& rho) {
    std::vector<std::byte> out(static_cast<std::size_t>(rho.rho.size()) * 2 * sizeof(double));
    std::size_t offset = 0;
    for (Eigen::Index r = 0; r < rho.rho.rows(); ++r) {
        for (Eigen::Index c = 0; c < rho.rho.cols(); ++c) {
            const double re = rho.rho(r, c).real();
            const double im = rho.rho(r, c).imag();
            std::memcpy(out.data() + offset, &re, sizeof(double));
            std::memcpy(out.data() + offset + sizeof(double), &im, sizeof(double));
            offset += 2 * sizeof(double);
        }
    }
    return out;
}

}  // namespace pstab
