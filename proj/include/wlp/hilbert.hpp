/*
   Copyright 2026 wlpkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlp/errors.hpp"
#include "wlp/macaulay.hpp"

namespace wlp {

/// A finite Hilbert function h_0, h_1, ..., h_e stored without trailing zeros
/// (e is the socle degree).  The empty sequence stands for the zero algebra.
///
/// Construction only normalizes; validity (h_0 = 1, positivity, Macaulay
/// growth) is a separate question answered by is_o_sequence().
class HilbertFunction {
public:
    HilbertFunction() = default;

    explicit HilbertFunction(std::vector<Int> values) : values_(std::move(values)) {
        while (!values_.empty() && values_.back() == 0) values_.pop_back();
    }

    HilbertFunction(std::initializer_list<long> values) {
        for (long v : values) values_.emplace_back(v);
        while (!values_.empty() && values_.back() == 0) values_.pop_back();
    }

    /// Parses a comma-separated list, e.g. "1,3,6,10,12,12".
    static HilbertFunction parse(const std::string& text) {
        std::vector<Int> vals;
        std::string token;
        for (size_t pos = 0; pos <= text.size(); ++pos) {
            if (pos == text.size() || text[pos] == ',') {
                if (token.empty()) throw ParseError("empty entry in Hilbert function '" + text + "'");
                try {
                    vals.emplace_back(token);
                } catch (const std::invalid_argument&) {
                    throw ParseError("bad integer '" + token + "' in Hilbert function");
                }
                token.clear();
            } else if (!std::isspace(static_cast<unsigned char>(text[pos]))) {
                token += text[pos];
            }
        }
        if (vals.empty()) throw ParseError("empty Hilbert function");
        return HilbertFunction(std::move(vals));
    }

    const std::vector<Int>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// Socle degree e; -1 for the zero algebra.
    int socle_degree() const { return static_cast<int>(values_.size()) - 1; }

    /// h_i, with h_i = 0 for every i beyond the socle degree.
    Int operator[](int i) const {
        if (i < 0 || i >= static_cast<int>(values_.size())) return 0;
        return values_[static_cast<size_t>(i)];
    }

    std::string to_string() const {
        std::string out;
        for (const Int& v : values_) {
            if (!out.empty()) out += ",";
            out += v.get_str();
        }
        return out;
    }

    bool operator==(const HilbertFunction& other) const { return values_ == other.values_; }
    bool operator!=(const HilbertFunction& other) const { return values_ != other.values_; }
    bool operator<(const HilbertFunction& other) const { return values_ < other.values_; }

private:
    std::vector<Int> values_;
};

/// Macaulay admissibility: h_0 = 1, all entries positive, and
/// h_{i+1} <= growth_bound(h_i, i) at every step from degree 1 on.
inline bool is_o_sequence(const HilbertFunction& H) {
    if (H.is_zero() || H[0] != 1) return false;
    const int e = H.socle_degree();
    for (int i = 0; i <= e; ++i)
        if (H[i] <= 0) return false;
    for (int i = 1; i < e; ++i)
        if (H[i + 1] > growth_bound(H[i], i)) return false;
    return true;
}

inline void require_o_sequence(const HilbertFunction& H) {
    if (!is_o_sequence(H)) throw NotAnOSequence(H.to_string());
}

/// The smallest t >= 1 with h_t <= t (entries beyond the socle count as 0).
/// Always exists and satisfies t <= e + 1.
inline int first_drop_index(const HilbertFunction& H) {
    for (int t = 1;; ++t)
        if (H[t] <= t) return t;
}

/// Wiebe's degree-i condition: h_{i-1} = ((h_i)_(i))^{-1}_{-1}.
inline bool wiebe_condition_at(const HilbertFunction& H, int i) {
    if (i < 1 || i > H.socle_degree())
        throw std::out_of_range("wiebe_condition_at: index " + std::to_string(i) +
                                " outside 1.." + std::to_string(H.socle_degree()));
    return H[i - 1] == lower_both(H[i], i);
}

/// Decides whether every artinian algebra with Hilbert function H has the WLP:
/// true iff the Wiebe condition holds for all i = 1, ..., t-1 (vacuous at t = 1).
/// Throws NotAnOSequence on invalid input rather than returning false.
inline bool forces_wlp(const HilbertFunction& H) {
    require_o_sequence(H);
    const int t = first_drop_index(H);
    for (int i = 1; i < t; ++i)
        if (H[i - 1] != lower_both(H[i], i)) return false;
    return true;
}

/// As forces_wlp, also reporting the first index where the condition fails.
inline std::optional<int> wlp_forcing_failure_index(const HilbertFunction& H) {
    require_o_sequence(H);
    const int t = first_drop_index(H);
    for (int i = 1; i < t; ++i)
        if (H[i - 1] != lower_both(H[i], i)) return i;
    return std::nullopt;
}

/// The Hilbert function a generic hyperplane section must have when H forces
/// the WLP: 1, h_1 - 1, h_2 - h_1, ..., h_{t-1} - h_{t-2}, then 0.
/// Returned unvalidated: for a valid but non-increasing H the formal first
/// differences may be nonpositive.
inline HilbertFunction expected_quotient_hf(const HilbertFunction& H) {
    require_o_sequence(H);
    const int t = first_drop_index(H);
    std::vector<Int> vals;
    vals.emplace_back(1);
    for (int i = 1; i < t; ++i) vals.emplace_back(H[i] - H[i - 1]);
    return HilbertFunction(std::move(vals));
}

/// Streams every O-sequence with h_1 = codim, socle degree <= max_socle_degree
/// and all values <= max_value, each exactly once, in lexicographic order of
/// the value lists.  Single-owner state; transferable between threads.
class OSequenceEnumerator {
public:
    OSequenceEnumerator(int codim, int max_socle_degree, Int max_value)
        : max_e_(max_socle_degree), cap_(std::move(max_value)) {
        if (codim < 1 || max_socle_degree < 1 || cap_ < 1)
            throw std::invalid_argument("OSequenceEnumerator: all bounds must be >= 1");
        if (Int(codim) <= cap_) stack_.push_back({Int(codim), false});
    }

    std::optional<HilbertFunction> next() {
        while (!stack_.empty()) {
            Frame& top = stack_.back();
            if (!top.emitted) {
                top.emitted = true;
                return current();
            }
            // descend to the smallest extension, else advance a sibling / pop
            const int top_degree = static_cast<int>(stack_.size());
            if (top_degree < max_e_) {
                Int bound = growth_bound(top.value, top_degree);
                if (bound > cap_) bound = cap_;
                if (bound >= 1) {
                    stack_.push_back({Int(1), false});
                    continue;
                }
            }
            backtrack();
        }
        return std::nullopt;
    }

private:
    struct Frame {
        Int value;
        bool emitted;
    };

    HilbertFunction current() const {
        std::vector<Int> vals;
        vals.emplace_back(1);
        for (const Frame& f : stack_) vals.push_back(f.value);
        return HilbertFunction(std::move(vals));
    }

    void backtrack() {
        while (!stack_.empty()) {
            Frame done = stack_.back();
            stack_.pop_back();
            if (stack_.empty()) return; // h_1 is fixed; exhausting it ends the stream
            const int degree = static_cast<int>(stack_.size()) + 1;
            Int bound = growth_bound(stack_.back().value, degree - 1);
            if (bound > cap_) bound = cap_;
            if (done.value < bound) {
                stack_.push_back({done.value + 1, false});
                return;
            }
        }
    }

    int max_e_;
    Int cap_;
    std::vector<Frame> stack_;
};

inline OSequenceEnumerator enumerate_o_sequences(int codim, int max_socle_degree, Int max_value) {
    return OSequenceEnumerator(codim, max_socle_degree, std::move(max_value));
}

} // namespace wlp
