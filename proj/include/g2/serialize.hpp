// JSON encodings for reports: field elements as hex coefficient strings
// (least-significant nibble first), roots as {a, b}, matrices row-major.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "g2/gf2m.hpp"
#include "g2/matrix.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

using json = nlohmann::ordered_json;

inline json root_json(Root r) { return json{{"a", r.a}, {"b", r.b}}; }

inline json mat_json(const Field& F, const Mat& m) {
  json rows = json::array();
  for (felem v : m.e) rows.push_back(F.to_hex(v));
  return rows;
}

inline std::string modulus_string(const Field& F) {
  std::string s;
  for (int i = F.degree(); i >= 0; --i) {
    if (!((F.modulus() >> i) & 1)) continue;
    if (!s.empty()) s += "+";
    if (i == 0) s += "1";
    else if (i == 1) s += "x";
    else s += "x^" + std::to_string(i);
  }
  return s;
}

// Order-independent digest of an enumerated subgroup.
inline std::string subgroup_digest(const std::vector<Mat>& elems) {
  MatHash h;
  std::uint64_t acc = 0;
  for (const Mat& m : elems) acc ^= (std::uint64_t)h(m);
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)acc);
  return buf;
}

}  // namespace g2
