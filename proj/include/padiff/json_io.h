// Copyright 2026 The padiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "padiff/errors.h"
#include "padiff/isogeny.h"
#include "padiff/poly.h"
#include "padiff/series.h"

namespace padiff {

using Json = nlohmann::ordered_json;

// A job document that does not match the schema in docs/schema.md.
class SchemaError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "SchemaError"; }
};

// Integers are written as base-10 strings; plain JSON integers are accepted
// on input as well.
int64_t IntFromJson(const Json& j, const std::string& what);
uint64_t UIntFromJson(const Json& j, const std::string& what);
std::vector<int64_t> IntVectorFromJson(const Json& j, const std::string& what);
std::vector<std::vector<int64_t>> IntMatrixFromJson(const Json& j,
                                                    const std::string& what);
std::pair<int64_t, int64_t> PointFromJson(const Json& j,
                                          const std::string& what);

// Required and optional members of an object.
const Json& Member(const Json& obj, const std::string& key);
bool Has(const Json& obj, const std::string& key);

// Elements print as a string when d = 1 and as an array of d digit strings
// otherwise.
Json ToJson(const PadicElement& a);
Json ToJson(const Poly& f);
Json ToJson(const Series& s);
Json ToJson(const RationalFunction& r);
Json ToJson(const RationalRepresentation& rep);
Json ToJson(const DegreeBounds& b);
Json ToJson(const VerifyReport& r);

// Reads a representation written by ToJson over the prime field `ctx`.
RationalRepresentation RepresentationFromJson(const Json& j,
                                              const ContextPtr& ctx);

}  // namespace padiff
