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

#include <stdexcept>
#include <string>

namespace wlp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAnOSequence : Error {
    explicit NotAnOSequence(const std::string& what) : Error("not an O-sequence: " + what) {}
};

struct NonHomogeneousGenerator : Error {
    explicit NonHomogeneousGenerator(const std::string& what)
        : Error("non-homogeneous generator: " + what) {}
};

struct CodimensionExceedsRing : Error {
    explicit CodimensionExceedsRing(const std::string& what)
        : Error("codimension exceeds ring: " + what) {}
};

struct CodimensionMismatch : Error {
    explicit CodimensionMismatch(const std::string& what)
        : Error("codimension mismatch: " + what) {}
};

struct DuplicatePoint : Error {
    explicit DuplicatePoint(const std::string& what) : Error("duplicate point: " + what) {}
};

struct NotArtinianByCap : Error {
    int cap;
    explicit NotArtinianByCap(int d_cap)
        : Error("quotient did not vanish by degree " + std::to_string(d_cap)), cap(d_cap) {}
};

struct LinearFormInIdeal : Error {
    LinearFormInIdeal() : Error("linear form lies in the ideal") {}
    explicit LinearFormInIdeal(const std::string& form)
        : Error("linear form lies in the ideal: " + form) {}
};

struct NotStable : Error {
    explicit NotStable(const std::string& what) : Error("ideal is not stable: " + what) {}
};

struct NegativeEntry : Error {
    explicit NegativeEntry(const std::string& what) : Error("negative entry: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace wlp
