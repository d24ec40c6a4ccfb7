#pragma once

// JSON interchange formats.
//
//   array:   {"q": int, "m": int, "entries": [int x 2^m]}        (index order t)
//   pair:    {"f": array, "g": array}
//   params:  {"q", "m", "pi", "c", "c0", "c_prime"}             (pi is 1-based)
//   certificate node:
//            {"m", "f", "g", "params", "c_path"} for leaves, plus
//            {"split_var", "z1", "z2", "a", "b", "c", "d", "e", "e_prime",
//             "c_split", "children": [node_ab, node_cd]} for interior nodes
//            (variables 1-based, local to the node's pair)
//   report:  {"q", "m", "total_arrays", "gap_pair_count", "standard_pair_count",
//             "all_standard", "nonstandard_witnesses": [pair...]}

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "golay/census.hpp"
#include "golay/decompose.hpp"
#include "golay/error.hpp"
#include "golay/qarray.hpp"
#include "golay/standard.hpp"

namespace golay {

using Json = nlohmann::ordered_json;

/// Malformed or mistyped JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

inline Json mask_to_json(VarMask mask) {
  Json out = Json::array();
  for (VarMask r = mask; r != 0; r &= r - 1) out.push_back(std::countr_zero(r) + 1);
  return out;
}

inline VarMask mask_from_json(const Json& j, int m) {
  if (!j.is_array()) throw FormatError("variable set must be an array");
  VarMask mask = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("variable index must be an integer");
    const int k = v.get<int>();
    if (k < 1 || k > m) throw FormatError("variable index out of range");
    mask |= VarMask{1} << (k - 1);
  }
  return mask;
}

}  // namespace detail

inline Json to_json(const QaryArray& f) { return Json{{"q", f.q()}, {"m", f.m()}, {"entries", f.entries()}}; }

inline QaryArray array_from_json(const Json& j) {
  return QaryArray(detail::field<int>(j, "q"), detail::field<int>(j, "m"), detail::field<std::vector<int>>(j, "entries"));
}

inline Json to_json(const ArrayPair& p) { return Json{{"f", to_json(p.f)}, {"g", to_json(p.g)}}; }

inline ArrayPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("g")) throw FormatError("pair must have \"f\" and \"g\"");
  ArrayPair p{array_from_json(j.at("f")), array_from_json(j.at("g"))};
  require_same_shape(p.f, p.g);
  return p;
}

inline Json to_json(const StandardParams& p) {
  std::vector<int> pi;
  for (int v : p.pi) pi.push_back(v + 1);
  return Json{{"q", p.q}, {"m", p.m}, {"pi", pi}, {"c", p.c}, {"c0", p.c0}, {"c_prime", p.c_prime}};
}

inline StandardParams params_from_json(const Json& j) {
  StandardParams p;
  p.q = detail::field<int>(j, "q");
  p.m = detail::field<int>(j, "m");
  for (int v : detail::field<std::vector<int>>(j, "pi")) p.pi.push_back(v - 1);
  p.c = detail::field<std::vector<int>>(j, "c");
  p.c0 = detail::field<int>(j, "c0");
  p.c_prime = detail::field<int>(j, "c_prime");
  validate(p);
  return p;
}

inline Json to_json(const CertificateNode& n) {
  Json j{{"m", n.pair.f.m()}, {"f", to_json(n.pair.f)}, {"g", to_json(n.pair.g)}, {"params", to_json(n.params)},
         {"c_path", to_path_positions(n.params)}};
  if (n.step) {
    const auto& s = *n.step;
    j["split_var"] = s.split_var + 1;
    j["z1"] = detail::mask_to_json(s.split.z1);
    j["z2"] = detail::mask_to_json(s.split.z2);
    j["a"] = to_json(s.split.a);
    j["b"] = to_json(s.split.b);
    j["c"] = to_json(s.split.c);
    j["d"] = to_json(s.d);
    j["e"] = s.e;
    j["e_prime"] = s.e_prime;
    j["c_split"] = s.c_split;
    Json kids = Json::array();
    for (const auto& child : n.children) kids.push_back(to_json(child));
    j["children"] = std::move(kids);
  }
  return j;
}

inline CertificateNode certificate_from_json(const Json& j) {
  CertificateNode n{ArrayPair{array_from_json(detail::field<Json>(j, "f")), array_from_json(detail::field<Json>(j, "g"))},
                    params_from_json(detail::field<Json>(j, "params")),
                    std::nullopt,
                    {}};
  if (j.contains("split_var")) {
    CertificateNode::Step s;
    const int m = n.pair.f.m();
    s.split_var = detail::field<int>(j, "split_var") - 1;
    s.split.m = m - 1;
    s.split.z1 = detail::mask_from_json(detail::field<Json>(j, "z1"), m - 1);
    s.split.z2 = detail::mask_from_json(detail::field<Json>(j, "z2"), m - 1);
    s.split.a = array_from_json(detail::field<Json>(j, "a"));
    s.split.b = array_from_json(detail::field<Json>(j, "b"));
    s.split.c = array_from_json(detail::field<Json>(j, "c"));
    s.d = array_from_json(detail::field<Json>(j, "d"));
    s.e = detail::field<int>(j, "e");
    s.e_prime = detail::field<int>(j, "e_prime");
    s.c_split = detail::field<int>(j, "c_split");
    n.step = std::move(s);
    const Json kids = detail::field<Json>(j, "children");
    if (!kids.is_array()) throw FormatError("\"children\" must be an array");
    for (const auto& k : kids) n.children.push_back(certificate_from_json(k));
  }
  return n;
}

inline Json to_json(const Decomposition& d) { return Json{{"params", to_json(d.params)}, {"certificate", to_json(d.certificate)}}; }

inline Json to_json(const CensusReport& r, bool include_elapsed = false) {
  Json w = Json::array();
  for (const auto& p : r.nonstandard_witnesses) w.push_back(to_json(p));
  Json j{{"q", r.q},
         {"m", r.m},
         {"total_arrays", r.total_arrays},
         {"gap_pair_count", r.gap_pair_count},
         {"standard_pair_count", r.standard_pair_count},
         {"all_standard", r.all_standard},
         {"nonstandard_witnesses", std::move(w)}};
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

inline CensusReport report_from_json(const Json& j) {
  CensusReport r;
  r.q = detail::field<int>(j, "q");
  r.m = detail::field<int>(j, "m");
  r.total_arrays = detail::field<std::uint64_t>(j, "total_arrays");
  r.gap_pair_count = detail::field<std::uint64_t>(j, "gap_pair_count");
  r.standard_pair_count = detail::field<std::uint64_t>(j, "standard_pair_count");
  r.all_standard = detail::field<bool>(j, "all_standard");
  for (const auto& w : detail::field<Json>(j, "nonstandard_witnesses")) r.nonstandard_witnesses.push_back(pair_from_json(w));
  if (j.contains("elapsed_seconds")) r.elapsed = std::chrono::duration<double>(detail::field<double>(j, "elapsed_seconds"));
  return r;
}

/// Parses text, mapping syntax errors to FormatError.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace golay
