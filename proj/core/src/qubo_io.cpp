// Copyright 2026 The mqanneal authors
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

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "mqanneal/qubo.hpp"

namespace mqanneal {

std::string write_qubo(const Qubo& q, const VarRegistry* roles) {
  if (roles && roles->size() != q.n_vars)
    throw ValidationError("registry size does not match variable count");
  std::string out = "qubo " + std::to_string(q.n_vars) + " " +
                    std::to_string(q.offset) + "\n";
  if (roles)
    for (std::size_t i = 0; i < roles->size(); ++i)
      out += "# role " + std::to_string(i) + " " + (*roles)[i].to_string() +
             "\n";
  for (const auto& [i, c] : q.linear)
    out += std::to_string(i) + " " + std::to_string(i) + " " +
           std::to_string(c) + "\n";
  for (const auto& [ij, c] : q.quadratic)
    out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
           std::to_string(c) + "\n";
  return out;
}

QuboFile read_qubo(std::string_view text) {
  QuboFile out;
  bool have_header = false;
  std::vector<bool> role_seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line{text.substr(start, end - start)};
    ++line_no;

    const bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) {
      if (end == text.size()) break;
      start = end + 1;
      continue;
    }

    std::istringstream in{line};
    if (line[0] == '#') {
      std::string hash, kw;
      in >> hash >> kw;
      if (kw == "role") {
        if (!have_header)
          throw ParseError("role line before header", line_no, 1);
        long long id = -1;
        if (!(in >> id) || id < 0 ||
            id >= static_cast<long long>(out.qubo.n_vars))
          throw ParseError("role line has a bad variable id", line_no, 1);
        std::string rest;
        std::getline(in, rest);
        if (out.roles.empty()) {
          out.roles.assign(out.qubo.n_vars, VarRole::original());
          role_seen.assign(out.qubo.n_vars, false);
        }
        if (role_seen[static_cast<std::size_t>(id)])
          throw ParseError("duplicate role for variable " + std::to_string(id),
                           line_no, 1);
        role_seen[static_cast<std::size_t>(id)] = true;
        try {
          out.roles[static_cast<std::size_t>(id)] = VarRole::parse(rest);
        } catch (const ValidationError& e) {
          throw ParseError(e.what(), line_no, 1);
        }
      }
      // Other comments are ignored.
    } else if (!have_header) {
      std::string kw;
      long long n = 0, off = 0;
      std::string rest;
      in >> kw >> n >> off;
      if (kw != "qubo" || in.fail() || n < 0 || (in >> rest))
        throw ParseError("expected header 'qubo <n_vars> <offset>'", line_no,
                         1);
      out.qubo.n_vars = static_cast<std::uint32_t>(n);
      out.qubo.offset = off;
      have_header = true;
    } else {
      long long i = -1, j = -1, c = 0;
      std::string rest;
      if (!(in >> i >> j >> c) || (in >> rest))
        throw ParseError("expected '<i> <j> <coefficient>'", line_no, 1);
      if (i < 0 || j < 0 || i >= static_cast<long long>(out.qubo.n_vars) ||
          j >= static_cast<long long>(out.qubo.n_vars))
        throw ParseError("variable id out of range", line_no, 1);
      if (i > j)
        throw ParseError("quadratic entries need i < j", line_no, 1);
      const VarId vi = static_cast<VarId>(i), vj = static_cast<VarId>(j);
      if (i == j) {
        if (out.qubo.linear.count(vi))
          throw ParseError("duplicate linear entry for variable " +
                               std::to_string(i),
                           line_no, 1);
        out.qubo.add_linear(vi, c);
      } else {
        if (out.qubo.quadratic.count({vi, vj}))
          throw ParseError("duplicate quadratic entry for pair " +
                               std::to_string(i) + "," + std::to_string(j),
                           line_no, 1);
        out.qubo.add_quadratic(vi, vj, c);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!have_header)
    throw ParseError("missing 'qubo <n_vars> <offset>' header", line_no, 1);
  if (!out.roles.empty())
    for (std::size_t i = 0; i < role_seen.size(); ++i)
      if (!role_seen[i])
        throw ParseError(
            "registry is incomplete: variable " + std::to_string(i) +
                " has no role line",
            line_no, 1);
  return out;
}

std::string qubo_to_json(const Qubo& q, const VarRegistry* roles) {
  if (roles && roles->size() != q.n_vars)
    throw ValidationError("registry size does not match variable count");
  nlohmann::json j;
  j["n_vars"] = q.n_vars;
  j["offset"] = q.offset;
  j["linear"] = nlohmann::json::object();
  for (const auto& [i, c] : q.linear) j["linear"][std::to_string(i)] = c;
  j["quadratic"] = nlohmann::json::array();
  for (const auto& [ij, c] : q.quadratic)
    j["quadratic"].push_back({ij.first, ij.second, c});
  if (roles) {
    j["roles"] = nlohmann::json::array();
    for (const auto& r : *roles) j["roles"].push_back(r.to_string());
  }
  return j.dump(2);
}

QuboFile qubo_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  QuboFile out;
  try {
    out.qubo.n_vars = j.at("n_vars").get<std::uint32_t>();
    out.qubo.offset = j.at("offset").get<std::int64_t>();
    for (const auto& [key, val] : j.at("linear").items())
      out.qubo.add_linear(static_cast<VarId>(std::stoul(key)),
                          val.get<std::int64_t>());
    for (const auto& entry : j.at("quadratic"))
      out.qubo.add_quadratic(entry.at(0).get<VarId>(),
                             entry.at(1).get<VarId>(),
                             entry.at(2).get<std::int64_t>());
    if (j.contains("roles")) {
      for (const auto& r : j.at("roles"))
        out.roles.push_back(VarRole::parse(r.get<std::string>()));
      if (out.roles.size() != out.qubo.n_vars)
        throw ValidationError("registry size does not match variable count");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return out;
}

}  // namespace mqanneal
