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

#include "hopfconc/state_io.h"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hopfconc/error.h"

namespace hopfconc {

using nlohmann::json;

PureState parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amplitudes")) {
        throw Error(ErrorKind::Parse, "state must be an object with \"dims\" and \"amplitudes\"");
    }
    const json &jdims = doc["dims"];
    const json &jamps = doc["amplitudes"];
    if (!jdims.is_array() || !jamps.is_array()) {
        throw Error(ErrorKind::Parse, "\"dims\" and \"amplitudes\" must be arrays");
    }
    std::vector<std::size_t> dims;
    for (const json &d : jdims) {
        if (!d.is_number_integer() || d.get<long long>() < 0) {
            throw Error(ErrorKind::Parse, "dimensions must be non-negative integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    std::vector<Complex> amps;
    amps.reserve(jamps.size());
    for (const json &a : jamps) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw Error(ErrorKind::Parse, "each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return make_state(std::move(dims), std::move(amps));
}

PureState load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string state_to_json(const PureState &state) {
    json doc;
    doc["dims"] = state.dims();
    json amps = json::array();
    for (const Complex &a : state.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    doc["amplitudes"] = std::move(amps);
    return doc.dump();
}

}  // namespace hopfconc
