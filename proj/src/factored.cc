// Copyright 2026 The NQA Authors
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

#include "nqa/factored.h"

#include <algorithm>
#include <string>
#include <type_traits>

#include "nqa/errors.h"

namespace nqa {

namespace {

bool is_z_type(LocalProjector p) {
    return p == LocalProjector::P0 || p == LocalProjector::P1;
}

}  // namespace

NqaOperator local_projector(LocalProjector p, size_t slot, size_t num_slots) {
    NqaOperator out = scale(0.5, NqaOperator::identity(num_slots));
    switch (p) {
        case LocalProjector::P0:
            out.add_term(NqaWord::single(num_slots, slot, Block::Z), 0.5);
            break;
        case LocalProjector::P1:
            out.add_term(NqaWord::single(num_slots, slot, Block::Z), -0.5);
            break;
        case LocalProjector::Plus:
            out.add_term(NqaWord::single(num_slots, slot, Block::X), 0.5);
            break;
    }
    return out;
}

ProjectorReflection::ProjectorReflection(size_t m, std::vector<std::pair<size_t, LocalProjector>> projectors,
                                         bool negated)
    : num_slots(m), projectors(std::move(projectors)), negated(negated) {
    if (m == 0) {
        throw DimensionError("ProjectorReflection: need at least one slot");
    }
    for (size_t i = 0; i < this->projectors.size(); ++i) {
        size_t k = this->projectors[i].first;
        if (k >= m) {
            throw SlotError("ProjectorReflection: slot " + std::to_string(k + 1) + " outside 1.." +
                            std::to_string(m));
        }
        for (size_t j = 0; j < i; ++j) {
            if (this->projectors[j].first == k) {
                throw SlotError("ProjectorReflection: slot " + std::to_string(k + 1) + " repeated");
            }
        }
    }
}

NqaOperator expand(const ProjectorReflection &r) {
    NqaOperator prod = NqaOperator::identity(r.num_slots);
    for (const auto &[k, p] : r.projectors) {
        prod = op_mul(prod, local_projector(p, k, r.num_slots));
    }
    NqaOperator out = NqaOperator::identity(r.num_slots) - scale(2.0, prod);
    return r.negated ? scale(-1.0, out) : out;
}

DenseMatrix to_dense(const ProjectorReflection &r, size_t max_slots) {
    if (r.num_slots > max_slots) {
        throw SizeError("dense conversion of " + std::to_string(r.num_slots) + " slots exceeds the cap");
    }
    size_t n = size_t{1} << r.num_slots;
    DenseMatrix prod = DenseMatrix::identity(n);
    for (const auto &[k, p] : r.projectors) {
        prod = mat_mul(prod, to_dense(local_projector(p, k, r.num_slots), max_slots));
    }
    DenseMatrix out = DenseMatrix::identity(n) - 2.0 * prod;
    if (r.negated) {
        out *= -1.0;
    }
    return out;
}

StateVector apply(const ProjectorReflection &r, const StateVector &v) {
    if (r.num_slots != v.num_slots) {
        throw DimensionError("apply: reflection has " + std::to_string(r.num_slots) + " slots, state has " +
                             std::to_string(v.num_slots));
    }
    const size_t m = r.num_slots;
    StateVector out = v;
    const double flip = r.negated ? -1.0 : 1.0;

    bool all_z = std::all_of(r.projectors.begin(), r.projectors.end(),
                             [](const auto &kp) { return is_z_type(kp.second); });
    bool all_plus_everywhere =
        r.projectors.size() == m && std::all_of(r.projectors.begin(), r.projectors.end(), [](const auto &kp) {
            return kp.second == LocalProjector::Plus;
        });

    if (all_z && m <= 63) {
        // prod P is the projector onto basis states matching `pattern` on `mask`.
        uint64_t mask = 0;
        uint64_t pattern = 0;
        for (const auto &[k, p] : r.projectors) {
            uint64_t bit = uint64_t{1} << (m - 1 - k);
            mask |= bit;
            if (p == LocalProjector::P1) {
                pattern |= bit;
            }
        }
        for (uint64_t x = 0; x < v.dim(); ++x) {
            double a = v.amplitudes[x];
            out.amplitudes[x] = ((x & mask) == pattern) ? -a : a;
        }
    } else if (all_plus_everywhere) {
        // prod P = |s><s|, so (I - 2P) v = v - 2 <s|v> |s> = v - 2 mean(v).
        double mean = 0.0;
        for (double a : v.amplitudes) {
            mean += a;
        }
        mean /= static_cast<double>(v.dim());
        for (double &a : out.amplitudes) {
            a -= 2.0 * mean;
        }
    } else {
        StateVector w = v;
        for (const auto &[k, p] : r.projectors) {
            w = nqa::apply(local_projector(p, k, m), w);
        }
        for (size_t x = 0; x < v.dim(); ++x) {
            out.amplitudes[x] = v.amplitudes[x] - 2.0 * w.amplitudes[x];
        }
    }
    if (flip < 0) {
        for (double &a : out.amplitudes) {
            a = -a;
        }
    }
    return out;
}

size_t factor_slots(const Factor &f) {
    return std::visit(
        [](const auto &x) -> size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NqaOperator>) {
                return x.num_slots();
            } else {
                return x.num_slots;
            }
        },
        f);
}

FactoredOperator::FactoredOperator(size_t num_slots) : num_slots_(num_slots) {
    if (num_slots == 0) {
        throw DimensionError("FactoredOperator: need at least one slot");
    }
}

FactoredOperator::FactoredOperator(size_t num_slots, std::vector<Factor> factors) : FactoredOperator(num_slots) {
    for (auto &f : factors) {
        push_back(std::move(f));
    }
}

void FactoredOperator::push_back(Factor f) {
    if (factor_slots(f) != num_slots_) {
        throw DimensionError("FactoredOperator: factor has " + std::to_string(factor_slots(f)) +
                             " slots, product has " + std::to_string(num_slots_));
    }
    factors_.push_back(std::move(f));
}

NqaOperator expand(const Factor &f) {
    return std::visit(
        [](const auto &x) -> NqaOperator {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NqaOperator>) {
                return x;
            } else {
                return expand(x);
            }
        },
        f);
}

NqaOperator expand(const FactoredOperator &f) {
    NqaOperator out = NqaOperator::identity(f.num_slots());
    for (const auto &factor : f.factors()) {
        out = op_mul(out, expand(factor));
    }
    return out;
}

DenseMatrix to_dense(const Factor &f, size_t max_slots) {
    return std::visit([max_slots](const auto &x) { return to_dense(x, max_slots); }, f);
}

DenseMatrix to_dense(const FactoredOperator &f, size_t max_slots) {
    if (f.num_slots() > max_slots) {
        throw SizeError("dense conversion of " + std::to_string(f.num_slots()) + " slots exceeds the cap");
    }
    DenseMatrix out = DenseMatrix::identity(size_t{1} << f.num_slots());
    for (const auto &factor : f.factors()) {
        out = mat_mul(out, to_dense(factor, max_slots));
    }
    return out;
}

StateVector apply(const Factor &f, const StateVector &v) {
    return std::visit([&v](const auto &x) { return nqa::apply(x, v); }, f);
}

StateVector apply(const FactoredOperator &f, const StateVector &v) {
    if (f.num_slots() != v.num_slots) {
        throw DimensionError("apply: product has " + std::to_string(f.num_slots()) + " slots, state has " +
                             std::to_string(v.num_slots));
    }
    StateVector out = v;
    for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) {
        out = nqa::apply(*it, out);
    }
    return out;
}

StructureSize structure_size(const FactoredOperator &f) {
    StructureSize s;
    for (const auto &factor : f.factors()) {
        if (const auto *r = std::get_if<ProjectorReflection>(&factor)) {
            s.local_factors += std::max<size_t>(r->projectors.size(), 1);
        } else {
            s.local_factors += 1;
        }
    }
    s.block_terms = expand(f).num_terms();
    return s;
}

}  // namespace nqa
