/*
 * Copyright 2026 The effinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "effinfo/cli/documents.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace effinfo::cli {

namespace {

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object()) {
        throw ParseError("document must be a JSON object");
    }
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

const Json& require_array(const Json& doc, const char* key) {
    const Json& value = require(doc, key);
    if (!value.is_array()) {
        throw ParseError(std::string("\"") + key + "\" must be an array");
    }
    return value;
}

std::vector<std::string> names(const Json& doc, const char* key) {
    std::vector<std::string> out;
    for (const auto& item : require_array(doc, key)) {
        if (!item.is_string()) {
            throw ParseError(std::string("\"") + key + "\" must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<double> reals(const Json& array, const std::string& where) {
    if (!array.is_array()) {
        throw ParseError(where + " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(array.size());
    for (const auto& item : array) {
        if (!item.is_number()) {
            throw ParseError(where + " must contain only numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

}  // namespace

DocumentKind detect_kind(const Json& doc) {
    if (!doc.is_object()) {
        throw ParseError("document must be a JSON object");
    }
    if (doc.contains("matrix")) {
        return DocumentKind::channel;
    }
    if (doc.contains("table")) {
        return DocumentKind::map;
    }
    if (doc.contains("functions") || doc.contains("dataset")) {
        return DocumentKind::instance;
    }
    if (doc.contains("probs")) {
        return DocumentKind::prior;
    }
    throw ParseError("unrecognized document: expected a channel, map, prior or "
                     "learning instance");
}

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_document(std::string_view path, std::istream& stdin_stream) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), {});
    } else {
        std::ifstream file{std::string(path), std::ios::binary};
        if (!file) {
            throw ParseError("cannot open '" + std::string(path) + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_text(text);
}

Channel parse_channel(const Json& doc, double tolerance) {
    Alphabet inputs(names(doc, "inputs"));
    Alphabet outputs(names(doc, "outputs"));
    std::vector<std::vector<double>> rows;
    const Json& matrix = require_array(doc, "matrix");
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        rows.push_back(reals(matrix[i], "matrix row " + std::to_string(i)));
    }
    return Channel(std::move(inputs), std::move(outputs), rows, tolerance);
}

Json to_document(const Channel& m) {
    return Json{{"inputs", m.input().labels()},
                {"outputs", m.output().labels()},
                {"matrix", m.matrix()}};
}

DeterministicMap parse_map(const Json& doc) {
    Alphabet inputs(names(doc, "inputs"));
    Alphabet outputs(names(doc, "outputs"));
    std::vector<std::size_t> table;
    for (const auto& name : names(doc, "table")) {
        table.push_back(outputs.index_of(name));
    }
    return DeterministicMap(std::move(inputs), std::move(outputs), std::move(table));
}

Json to_document(const DeterministicMap& f) {
    Json table = Json::array();
    for (std::size_t y : f.table()) {
        table.push_back(f.output().label(y));
    }
    return Json{{"inputs", f.input().labels()},
                {"outputs", f.output().labels()},
                {"table", std::move(table)}};
}

Distribution parse_prior(const Json& doc, const Alphabet& over, double tolerance) {
    return Distribution(over, reals(require(doc, "probs"), "\"probs\""), tolerance);
}

Json to_document(const Distribution& p) {
    return Json{{"probs", std::vector<double>(p.probs().begin(), p.probs().end())}};
}

LearningInstance parse_instance(const Json& doc) {
    learning::PointSet points(names(doc, "points"));
    std::vector<learning::Labeling> functions;
    const Json& fs = require_array(doc, "functions");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const Json& row = fs[i];
        if (!row.is_array()) {
            throw ParseError("function " + std::to_string(i) + " must be an array of +1/-1");
        }
        std::vector<int> signs;
        for (const auto& s : row) {
            if (!s.is_number_integer()) {
                throw ParseError("function " + std::to_string(i) +
                                 " must contain only the integers +1 and -1");
            }
            signs.push_back(s.get<int>());
        }
        functions.emplace_back(points, std::move(signs));
    }
    std::vector<std::size_t> indices;
    for (const auto& name : names(doc, "dataset")) {
        indices.push_back(points.index_of(name));
    }
    return LearningInstance{learning::FunctionClass(points, std::move(functions)),
                            learning::Dataset(points, std::move(indices))};
}

Json to_document(const LearningInstance& instance) {
    const auto& points = instance.functions.points();
    Json functions = Json::array();
    for (const auto& f : instance.functions.functions()) {
        functions.push_back(f.signs());
    }
    Json dataset = Json::array();
    for (std::size_t idx : instance.dataset.indices()) {
        dataset.push_back(points.name(idx));
    }
    return Json{{"points", points.points()},
                {"functions", std::move(functions)},
                {"dataset", std::move(dataset)}};
}

System parse_system(const Json& doc, double tolerance) {
    switch (detect_kind(doc)) {
        case DocumentKind::channel:
            return System{parse_channel(doc, tolerance), std::nullopt};
        case DocumentKind::map: {
            DeterministicMap f = parse_map(doc);
            return System{channel_of_map(f), std::move(f)};
        }
        default:
            throw ParseError("expected a channel or map document");
    }
}

}  // namespace effinfo::cli
