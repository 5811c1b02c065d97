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

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ikeda/errors.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/rational.hpp"

namespace ikeda {

/// Nondecreasing tuple 0 <= d_1 <= ... <= d_m <= r.
class DeltaTuple {
public:
    DeltaTuple(std::vector<int> entries, int bound) : entries_(std::move(entries)), bound_(bound) {
        if (entries_.empty()) {
            throw DomainError("delta tuple must have positive length");
        }
        if (bound_ < 0) {
            throw DomainError("delta tuple bound must be nonnegative");
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0 || entries_[i] > bound_ || (i > 0 && entries_[i] < entries_[i - 1])) {
                throw DomainError("not a nondecreasing tuple in [0, " + std::to_string(bound_) + "]: " + to_string());
            }
        }
    }

    /// Tuple with bound equal to its largest entry.
    explicit DeltaTuple(std::vector<int> entries)
        : DeltaTuple(entries, entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end())) {}

    std::span<const int> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int bound() const { return bound_; }
    int operator[](std::size_t i) const { return entries_[i]; }

    int sum() const {
        int s = 0;
        for (int v : entries_) {
            s += v;
        }
        return s;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            out += (i ? "," : "") + std::to_string(entries_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const DeltaTuple& a, const DeltaTuple& b) { return a.entries_ == b.entries_; }

private:
    std::vector<int> entries_;
    int bound_;
};

/// Run lengths (k_1, ..., k_t) of equal consecutive entries.
struct MultiplicitySignature {
    std::vector<int> parts;

    int total() const {
        int s = 0;
        for (int k : parts) {
            s += k;
        }
        return s;
    }

    friend bool operator==(const MultiplicitySignature&, const MultiplicitySignature&) = default;
};

/// All nondecreasing tuples of length m with entries in [0, r], in
/// lexicographic order. There are binomial(r + m, m) of them.
inline std::vector<DeltaTuple> enumerate_deltas(int m, int r) {
    if (m < 1 || r < 0) {
        throw DomainError("enumerate_deltas requires m >= 1 and r >= 0");
    }
    std::vector<DeltaTuple> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    while (true) {
        out.emplace_back(cur, r);
        // Advance to the lexicographic successor: bump the last entry that
        // can grow and flatten everything after it to the same value.
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == r) {
            --i;
        }
        if (i < 0) {
            break;
        }
        const int v = cur[static_cast<std::size_t>(i)] + 1;
        std::fill(cur.begin() + i, cur.end(), v);
    }
    return out;
}

inline MultiplicitySignature multiplicity_signature(const DeltaTuple& delta) {
    MultiplicitySignature sig;
    const auto e = delta.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0 && e[i] == e[i - 1]) {
            ++sig.parts.back();
        } else {
            sig.parts.push_back(1);
        }
    }
    return sig;
}

/// phi_m(x) = prod_{i=1}^m (x^i - 1), as a polynomial in x; phi_0 = 1.
inline LaurentQ phi(int m) {
    if (m < 0) {
        throw DomainError("phi requires m >= 0");
    }
    LaurentQ out(1);
    for (int i = 1; i <= m; ++i) {
        out *= LaurentQ::var(i) - LaurentQ(1);
    }
    return out;
}

/// Phi(delta) = phi_m / (phi_{k_1} ... phi_{k_t}) at x = p^{-1} = q^{-2}.
///
/// Computed by exact polynomial division, one phi_{k_i} at a time.
inline LaurentQ gaussian_multinomial(const DeltaTuple& delta) {
    LaurentQ quotient = phi(static_cast<int>(delta.size()));
    for (int k : multiplicity_signature(delta).parts) {
        quotient = exact_div(quotient, phi(k));
    }
    return quotient.substitute_power(-2);
}

/// Number of pairs i < j with seq[i] > seq[j].
inline std::uint64_t inversion_count(std::span<const int> seq) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] > seq[j]) {
                ++count;
            }
        }
    }
    return count;
}

/// Sum of q^{-2 inv(w)} over the distinct rearrangements w of delta.
///
/// Independent of `gaussian_multinomial`: it walks the multiset permutations
/// directly and never touches phi.
inline LaurentQ inversion_sum(const DeltaTuple& delta) {
    std::vector<int> w(delta.entries().begin(), delta.entries().end());
    std::sort(w.begin(), w.end());
    std::vector<std::uint64_t> histogram;
    do {
        const auto inv = inversion_count(w);
        if (histogram.size() <= inv) {
            histogram.resize(inv + 1, 0);
        }
        ++histogram[inv];
    } while (std::next_permutation(w.begin(), w.end()));

    LaurentQ out;
    for (std::size_t j = 0; j < histogram.size(); ++j) {
        out.add_term(-2 * static_cast<int>(j), Rational(Integer(static_cast<unsigned long>(histogram[j]))));
    }
    return out;
}

/// Weak compositions of j into m parts: binomial(j + m - 1, m - 1).
inline Integer weak_composition_count(int j, int m) {
    if (j < 0 || m < 1) {
        throw DomainError("weak_composition_count requires j >= 0 and m >= 1");
    }
    return binomial(static_cast<unsigned long>(j + m - 1), static_cast<unsigned long>(m - 1));
}

/// m! / (k_1! ... k_t!)
inline Integer multinomial(const MultiplicitySignature& sig) {
    Integer out = factorial(static_cast<unsigned long>(sig.total()));
    for (int k : sig.parts) {
        out /= factorial(static_cast<unsigned long>(k));
    }
    return out;
}

}  // namespace ikeda
