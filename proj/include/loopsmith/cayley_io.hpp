#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopsmith/chein.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/group.hpp"
#include "loopsmith/loop.hpp"

namespace loopsmith {

using ojson = nlohmann::ordered_json;

// Shared Cayley-table file layout:
//   {"name": ..., "order": n, "elements": [n labels], "table": [[n x n]]}
// The table is row-major; entry [i][j] encodes e_i . e_j. Groups and loops
// use the same layout; loading as a loop skips the associativity check.

namespace detail {

struct ParsedCayley {
  std::string name;
  Table table;
  std::vector<std::string> names;
};

inline ParsedCayley parse_cayley(const ojson& j) {
  ParsedCayley p;
  try {
    if (!j.is_object() || !j.contains("table"))
      throw ValidationError("cayley file must be an object with a table");
    p.name = j.value("name", std::string{});
    const auto& t = j.at("table");
    if (!t.is_array()) throw ValidationError("table must be an array of rows");
    for (const auto& row : t) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(v.get<int>());
      p.table.push_back(std::move(r));
    }
    if (j.contains("order") &&
        j.at("order").get<int>() != static_cast<int>(p.table.size()))
      throw ValidationError("declared order disagrees with the table");
    if (j.contains("elements"))
      for (const auto& v : j.at("elements"))
        p.names.push_back(v.get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed cayley file: ") + ex.what());
  }
  return p;
}

}  // namespace detail

inline FiniteGroup group_from_json(const ojson& j) {
  auto p = detail::parse_cayley(j);
  return validate_group(std::move(p.table), std::move(p.names));
}

inline FiniteLoop loop_from_json(const ojson& j) {
  auto p = detail::parse_cayley(j);
  return validate_loop(std::move(p.table), std::move(p.names));
}

inline ojson group_to_json(const FiniteGroup& g, const std::string& name) {
  ojson j;
  j["name"] = name;
  j["order"] = g.order;
  j["elements"] = g.names;
  ojson rows = ojson::array();
  for (int i = 0; i < g.order; ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < g.order; ++k) row.push_back(g.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

inline ojson loop_to_json(const FiniteLoop& l, const std::string& name) {
  ojson j;
  j["name"] = name;
  j["order"] = l.order;
  j["elements"] = l.names;
  ojson rows = ojson::array();
  for (int i = 0; i < l.order; ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < l.order; ++k) row.push_back(l.mul(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

// Doubled-loop file: the loop table plus a sidecar block recording the
// embedding of the source group.
inline ojson chein_to_json(const CheinEmbedding& e, const std::string& name) {
  ojson j = loop_to_json(e.loop, name);
  j["embedding"] = ojson{{"u_index", e.u_index},
                         {"group_order", e.group.order}};
  return j;
}

inline ojson load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("invalid JSON in ") + path + ": " +
                          ex.what());
  }
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << data;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace loopsmith
