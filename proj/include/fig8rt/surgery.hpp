// Copyright 2026 The fig8rt authors
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

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace fig8rt {

// Coprime surgery coefficient p/q with a Bezout lift p*d - q*c = 1.
// The canonical lift picks 0 <= d < |q| (d = p^{-1} mod |q|), and d = 0
// when |q| = 1.
struct SurgeryCoefficient {
    long long p = 0;
    long long q = 1;
    long long c = -1;
    long long d = 0;

    static SurgeryCoefficient make(long long p, long long q);

    // Same rational number; (p,q) and (-p,-q) describe the same manifold.
    bool same_surgery(const SurgeryCoefficient& o) const {
        return p * o.q == o.p * q;
    }
    double ratio() const { return static_cast<double>(p) / static_cast<double>(q); }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

inline SurgeryCoefficient SurgeryCoefficient::make(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("surgery coefficient: q must be nonzero");
    long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    if (g != 1) throw std::invalid_argument("surgery coefficient: p/q not in lowest terms");
    SurgeryCoefficient s;
    s.p = p;
    s.q = q;
    long long aq = q < 0 ? -q : q;
    if (aq == 1) {
        s.d = 0;
    } else {
        // d = p^{-1} mod |q| by extended Euclid.
        long long a = ((p % aq) + aq) % aq;
        long long t0 = 0, t1 = 1, r0 = aq, r1 = a;
        while (r1 != 0) {
            long long quot = r0 / r1;
            long long tmp = t0 - quot * t1;
            t0 = t1; t1 = tmp;
            tmp = r0 - quot * r1;
            r0 = r1; r1 = tmp;
        }
        s.d = ((t0 % aq) + aq) % aq;
    }
    s.c = (p * s.d - 1) / q;
    if (p * s.d - q * s.c != 1) throw std::logic_error("surgery coefficient: Bezout lift failed");
    return s;
}

}  // namespace fig8rt
