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

#include "hopfconc/error.h"

namespace hopfconc {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ZeroNorm:
            return "ZeroNorm";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::SplitMismatch:
            return "SplitMismatch";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::Parse:
            return "Parse";
        case ErrorKind::Io:
            return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace hopfconc
