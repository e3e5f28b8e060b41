#!/usr/bin/env python3
# Copyright 2026 The degstab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates data/catalog.json and include/degstab/catalog_data.hpp.
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[2]

REPS = [
    ("f2", "123", "11811", [7, 875, 0, 17795, 0]),
    ("f3", "123+145", "2314956", [1, 187, 60, 6147, 0]),
    ("f4", "123+456", "45354240", [0, 49, 49, 3059, 168]),
    ("f5", "123+245+346", "59527440", [0, 35, 35, 2371, 256]),
    ("f6", "123+145+246+356+456", "21165312", [0, 21, 21, 1683, 360]),
    ("f7", "127+347+567", "1763776", [1, 127, 0, 3747, 1080]),
    ("f8", "123+456+147", "2222357760", [0, 13, 13, 1427, 636]),
    ("f9", "123+245+346+147", "238109760", [0, 7, 7, 995, 568]),
    ("f10", "123+456+147+257", "17778862080", [0, 3, 3, 867, 678]),
    ("f11", "123+145+246+356+456+167", "444471552", [0, 1, 1, 563, 500]),
    ("f12", "123+145+246+356+456+167+247", "13545799680", [0, 0, 0, 651, 651]),
    ("f13", "123+456+178", None, [0, 7, 7, 847, 420]),
    ("f14", "123+456+178+478", None, [0, 1, 1, 459, 396]),
    ("f15", "123+245+678+147", None, [0, 1, 1, 351, 288]),
    ("f16", "123+245+346+378", None, [0, 7, 7, 739, 312]),
    ("f17", "123+145+246+356+456+178", None, [0, 1, 1, 243, 180]),
    ("f18", "123+145+246+356+456+167+238", None, [0, 0, 0, 167, 167]),
    ("f19", "123+145+246+356+456+158+237+678", None, [0, 0, 0, 151, 151]),
    ("f20", "123+145+246+356+456+278+347+168", None, [0, 0, 0, 45, 45]),
    ("f21", "145+246+356+456+278+347+168+237+147", None, [0, 0, 0, 75, 75]),
    ("f22", "123+234+345+456+567+678+128+238+348+458+568+178", None, [0, 0, 0, 105, 105]),
    ("f23", "123+145+246+356+456+167+578", None, [0, 0, 0, 91, 91]),
    ("f24", "123+145+246+356+456+167+568", None, [0, 1, 1, 307, 244]),
    ("f25", "123+145+246+356+456+167+348", None, [0, 0, 0, 155, 155]),
    ("f26", "123+456+147+257+268+278+348", None, [0, 1, 1, 135, 72]),
    ("f27", "123+456+147+257+168+178+248+358", None, [0, 0, 0, 15, 15]),
    ("f28", "127+347+567+258+368", None, [0, 1, 1, 243, 180]),
    ("f29", "123+456+147+368", None, [0, 2, 2, 459, 333]),
    ("f30", "123+456+147+368+578", None, [0, 0, 0, 151, 151]),
    ("f31", "123+456+147+368+478+568", None, [0, 0, 0, 243, 243]),
    ("f32", "123+456+147+168+258+348", None, [0, 0, 0, 91, 91]),
]

# Co-dimension 2 degree-drop counts of complements at n = 8.
COMP8 = {13: 547, 16: 491, 14: 379, 29: 379, 15: 323, 17: 267, 24: 267, 28: 267, 31: 267,
         18: 211, 19: 211, 26: 211, 30: 211, 22: 183, 21: 155, 23: 155, 25: 155, 27: 155,
         32: 155, 20: 127}
# Same at n = 7 for complements of f7..f12.
COMP7 = {7: 315, 8: 147, 9: 91, 10: 91, 11: 35, 12: 91}


def native_vars(anf):
    return max(int(c) for c in anf if c.isdigit())


def main():
    out = []
    for rid, anf, size, expected in REPS:
        idx = int(rid[1:])
        rec = {"id": rid, "anf": anf, "n_native": native_vars(anf)}
        if size is not None:
            rec["class_size_n7"] = size
        rec["expected"] = expected
        if idx in COMP8:
            rec["complement_codim2_n8"] = COMP8[idx]
        if idx in COMP7:
            rec["complement_codim2_n7"] = COMP7[idx]
        out.append(rec)
    text = "[\n" + ",\n".join("  " + json.dumps(r, separators=(",", ":")) for r in out) + "\n]\n"
    (ROOT / "data" / "catalog.json").write_text(text)

    h = 0xcbf29ce484222325
    for b in text.encode():
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    lic = (ROOT / "tools" / "gen" / "license_header.txt").read_text()
    hdr = lic + f"""// Generated by tools/gen/make_catalog.py from data/catalog.json. Do not edit.
#ifndef DEGSTAB_CATALOG_DATA_HPP
#define DEGSTAB_CATALOG_DATA_HPP

#include <cstdint>
#include <string_view>

namespace degstab::catalog_data {{

inline constexpr std::string_view kJson = R"json({text})json";

inline constexpr std::uint64_t kChecksum = 0x{h:016x}ull;

}}  // namespace degstab::catalog_data

#endif  // DEGSTAB_CATALOG_DATA_HPP
"""
    (ROOT / "include" / "degstab" / "catalog_data.hpp").write_text(hdr)


if __name__ == "__main__":
    main()
