/*
   Copyright 2026 The maxcurve Authors

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


// Hermitian-type curve y^9 + y = x^5 over F_81: counts, orders at infinity, bounds and a code.

#include <iostream>

#include "maxcurve/agcode.hpp"
#include "maxcurve/theorems.hpp"

int main() {
    using namespace maxcurve;
    const auto curve = CurveModel::hermitian(FieldTower::build(3, 2), 5);
    std::cout << "genus " << curve.genus() << ", rational points " << curve.points(Level::kFq2).size()
              << ", maximal " << std::boolalpha << curve.is_maximal() << "\n";

    std::cout << "positive non-gaps at infinity:";
    for (auto h : nongaps_at_infinity(curve, 8)) std::cout << ' ' << h;
    std::cout << "\n";

    const auto v = theorem01_check(curve);
    std::cout << "dichotomy branch " << to_string(v.branch) << "\n";

    const auto code = build_code(curve, 12);
    std::cout << "code [n=" << code.params.length << ", k=" << code.params.dimension
              << ", d>=" << code.params.designed_distance << "] over F_" << code.params.field_size << "\n";
}
