// Copyright 2026 The hopfconc Authors
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

#ifndef HOPFCONC_TESTS_UNIT_TABLES_H
#define HOPFCONC_TESTS_UNIT_TABLES_H

#include <string>

#include "hopfconc/hypercomplex.h"

namespace hopfconc::testing {

// Unit multiplication tables, row times column.
inline const char *const kQuaternionTable[4][4] = {
    {"1", "e1", "e2", "e3"},
    {"e1", "-1", "e3", "-e2"},
    {"e2", "-e3", "-1", "e1"},
    {"e3", "e2", "-e1", "-1"},
};

inline const char *const kOctonionTable[8][8] = {
    {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
    {"e1", "-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"},
    {"e2", "-e3", "-1", "e1", "e6", "e7", "-e4", "-e5"},
    {"e3", "e2", "-e1", "-1", "e7", "-e6", "e5", "-e4"},
    {"e4", "-e5", "-e6", "-e7", "-1", "e1", "e2", "e3"},
    {"e5", "e4", "-e7", "e6", "-e1", "-1", "-e3", "e2"},
    {"e6", "e7", "e4", "-e5", "-e2", "e3", "-1", "-e1"},
    {"e7", "-e6", "e5", "e4", "-e3", "-e2", "e1", "-1"},
};

inline BasisProduct parse_cell(std::string cell) {
    int sign = 1;
    if (cell[0] == '-') {
        sign = -1;
        cell = cell.substr(1);
    }
    return {sign, cell == "1" ? 0 : std::stoi(cell.substr(1))};
}

}  // namespace hopfconc::testing

#endif
