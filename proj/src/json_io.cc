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


#include "padiff/json_io.h"

#include <charconv>

namespace padiff {

int64_t IntFromJson(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (!j.is_string()) throw SchemaError(what + ": expected an integer string");
  const std::string& s = j.get_ref<const std::string&>();
  int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || b == e) {
    throw SchemaError(what + ": '" + s + "' is not a 64-bit integer");
  }
  return v;
}

uint64_t UIntFromJson(const Json& j, const std::string& what) {
  int64_t v = IntFromJson(j, what);
  if (v < 0) throw SchemaError(what + ": must be non-negative");
  return static_cast<uint64_t>(v);
}

std::vector<int64_t> IntVectorFromJson(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  std::vector<int64_t> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(IntFromJson(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int64_t>> IntMatrixFromJson(const Json& j,
                                                    const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array of rows");
  std::vector<std::vector<int64_t>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(IntVectorFromJson(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::pair<int64_t, int64_t> PointFromJson(const Json& j,
                                          const std::string& what) {
  auto v = IntVectorFromJson(j, what);
  if (v.size() != 2) throw SchemaError(what + ": expected [x, y]");
  return {v[0], v[1]};
}

const Json& Member(const Json& obj, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError("missing required field '" + key + "'");
  }
  return obj.at(key);
}

bool Has(const Json& obj, const std::string& key) {
  return obj.is_object() && obj.contains(key) && !obj.at(key).is_null();
}

Json ToJson(const PadicElement& a) {
  const auto& c = a.coeffs();
  if (c.size() == 1) return std::to_string(c[0]);
  Json arr = Json::array();
  for (uint64_t x : c) arr.push_back(std::to_string(x));
  return arr;
}

Json ToJson(const Poly& f) {
  Json arr = Json::array();
  for (size_t k = 0; k < f.size(); ++k) arr.push_back(ToJson(f[k]));
  return arr;
}

Json ToJson(const Series& s) {
  Json arr = Json::array();
  for (size_t k = 0; k < s.order(); ++k) arr.push_back(ToJson(s[k]));
  return arr;
}

Json ToJson(const RationalFunction& r) {
  return Json{{"num", ToJson(r.num)}, {"den", ToJson(r.den)}};
}

namespace {

Json ComponentsToJson(const std::vector<ComponentResult>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    Json o{{"name", c.name}};
    if (c.value) {
      o["num"] = ToJson(c.value->num);
      o["den"] = ToJson(c.value->den);
    } else {
      o["error"] = c.error;
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

std::vector<ComponentResult> ComponentsFromJson(const Json& j,
                                                const std::string& what,
                                                const ContextPtr& ctx) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  std::vector<ComponentResult> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string w = what + "[" + std::to_string(i) + "]";
    ComponentResult c;
    c.name = Has(j[i], "name") ? j[i].at("name").get<std::string>() : w;
    if (Has(j[i], "num")) {
      RationalFunction r{
          Poly::FromInts(ctx, IntVectorFromJson(j[i].at("num"), w + ".num")),
          Poly::FromInts(ctx, IntVectorFromJson(Member(j[i], "den"), w + ".den"))};
      if (r.den.IsZero()) throw SchemaError(w + ": zero denominator");
      c.value = std::move(r);
    } else {
      c.error = Has(j[i], "error") ? j[i].at("error").get<std::string>()
                                   : "missing";
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Json ToJson(const RationalRepresentation& rep) {
  return Json{{"sigma", ComponentsToJson(rep.sigma)},
              {"rho_over_v", ComponentsToJson(rep.rho)}};
}

RationalRepresentation RepresentationFromJson(const Json& j,
                                              const ContextPtr& ctx) {
  RationalRepresentation rep;
  rep.sigma = ComponentsFromJson(Member(j, "sigma"), "sigma", ctx);
  rep.rho = ComponentsFromJson(Member(j, "rho_over_v"), "rho_over_v", ctx);
  if (rep.sigma.size() != rep.rho.size()) {
    throw SchemaError("sigma and rho_over_v must have the same length");
  }
  return rep;
}

Json ToJson(const DegreeBounds& b) {
  return Json{{"l_eff", b.l_eff},
              {"sigma", b.sigma},
              {"rho_over_v", b.rho},
              {"default_order", b.order}};
}

Json ToJson(const VerifyReport& r) {
  Json o{{"trials", r.trials},
         {"passed", r.passed},
         {"failed", r.failed},
         {"extension_degree", r.extension_degree}};
  if (!r.first_counterexample.empty()) {
    o["first_counterexample"] = r.first_counterexample;
  }
  return o;
}

}  // namespace padiff
