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

#ifndef EFFINFO_CLI_DOCUMENTS_HPP
#define EFFINFO_CLI_DOCUMENTS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "effinfo/channel.hpp"
#include "effinfo/deterministic.hpp"
#include "effinfo/distribution.hpp"
#include "effinfo/errors.hpp"
#include "effinfo/learning.hpp"

namespace effinfo::cli {

using Json = nlohmann::ordered_json;

/// Malformed document: not valid JSON, a missing key, or a value of the
/// wrong type.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class DocumentKind { channel, map, prior, instance };

/// Classifies a document by its keys. Throws ParseError if none match.
DocumentKind detect_kind(const Json& doc);

/// Reads and parses a JSON document; "-" reads from \p stdin_stream.
Json read_document(std::string_view path, std::istream& stdin_stream);
Json parse_text(std::string_view text);

/// { "inputs": [names], "outputs": [names], "matrix": [[reals]] }
Channel parse_channel(const Json& doc, double tolerance = kDefaultTolerance);
Json to_document(const Channel& m);

/// { "inputs": [names], "outputs": [names], "table": [output name per input] }
DeterministicMap parse_map(const Json& doc);
Json to_document(const DeterministicMap& f);

/// { "probs": [reals] }, over the given alphabet.
Distribution parse_prior(const Json& doc, const Alphabet& over,
                         double tolerance = kDefaultTolerance);
Json to_document(const Distribution& p);

struct LearningInstance {
    learning::FunctionClass functions;
    learning::Dataset dataset;
};

/// { "points": [names], "functions": [[+-1 per point]], "dataset": [point names] }
LearningInstance parse_instance(const Json& doc);
Json to_document(const LearningInstance& instance);

/// A channel or map document. Maps are carried alongside their channel so
/// the closed forms can be reported.
struct System {
    Channel channel;
    std::optional<DeterministicMap> map;
};

System parse_system(const Json& doc, double tolerance = kDefaultTolerance);

}  // namespace effinfo::cli

#endif  // EFFINFO_CLI_DOCUMENTS_HPP
