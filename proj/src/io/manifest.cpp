/*
   Copyright 2026 The qtgenus Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "io/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "error.hpp"
#include "theorems/census.hpp"

namespace qtg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<long> integers(const std::string& text, int line) {
  std::vector<long> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      parse_fail(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) parse_fail(line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) parse_fail(line, "expected at least one integer");
  return out;
}

const std::map<std::string, std::vector<std::string>> kSectionKeys = {
    {"polytope", {"builtin", "dimension", "facets", "vertex"}},
    {"lambda", {"row"}},
    {"spinc", {"gamma"}},
    {"bundles", {"V", "W"}},
    {"circle", {"xi"}},
    {"classes", {"x"}},
};

std::string join(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  bool have_dimension = false, have_facets = false, seen_polytope = false, seen_lambda = false;
  std::map<std::string, bool> seen_sections;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    if (content.front() == '[') {
      if (content.back() != ']') parse_fail(line, "unterminated section header");
      section = trim(content.substr(1, content.size() - 2));
      if (!kSectionKeys.count(section)) parse_fail(line, "unknown section [" + section + "]");
      if (seen_sections[section]) parse_fail(line, "section [" + section + "] appears twice");
      seen_sections[section] = true;
      continue;
    }
    if (section.empty()) parse_fail(line, "key outside of any section");
    const auto eq = content.find('=');
    if (eq == std::string::npos) parse_fail(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    const auto& allowed = kSectionKeys.at(section);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      parse_fail(line, "unknown key '" + key + "' in [" + section + "]");

    if (section == "polytope") {
      seen_polytope = true;
      if (key == "builtin") {
        if (!m.polytope.builtin.empty()) parse_fail(line, "builtin given twice");
        std::istringstream words(value);
        words >> m.polytope.builtin;
        std::string rest;
        std::getline(words, rest);
        if (m.polytope.builtin.empty()) parse_fail(line, "builtin needs a name");
        m.polytope.params = integers(rest, line);
      } else if (key == "dimension") {
        const auto v = integers(value, line);
        if (v.size() != 1 || v[0] < 1) parse_fail(line, "dimension must be one positive integer");
        m.polytope.dimension = static_cast<int>(v[0]);
        have_dimension = true;
      } else if (key == "facets") {
        const auto v = integers(value, line);
        if (v.size() != 1 || v[0] < 1) parse_fail(line, "facets must be one positive integer");
        m.polytope.facets = static_cast<int>(v[0]);
        have_facets = true;
      } else {
        const auto v = integers(value, line);
        std::vector<int> vertex;
        for (long f : v) {
          if (f < 1) parse_fail(line, "facet labels start at 1");
          vertex.push_back(static_cast<int>(f));
        }
        m.polytope.vertices.push_back(vertex);
      }
    } else if (section == "lambda") {
      m.lambda.push_back(integers(value, line));
    } else if (section == "spinc") {
      if (m.gamma) parse_fail(line, "gamma given twice");
      m.gamma = integers(value, line);
    } else if (section == "bundles") {
      (key == "V" ? m.bundles.V : m.bundles.W).push_back(integers(value, line));
    } else if (section == "circle") {
      if (m.circle) parse_fail(line, "xi given twice");
      m.circle = integers(value, line);
    } else {
      m.classes.push_back(integers(value, line));
    }
    if (section == "lambda") seen_lambda = true;
  }
  if (!seen_polytope) parse_fail(line, "missing [polytope] section");
  const bool explicit_form = have_dimension || have_facets || !m.polytope.vertices.empty();
  if (m.polytope.builtin.empty() == !explicit_form) {
    if (explicit_form) parse_fail(line, "[polytope] mixes builtin with an explicit vertex list");
    parse_fail(line, "[polytope] needs a builtin or dimension, facets and vertices");
  }
  if (explicit_form && !(have_dimension && have_facets && !m.polytope.vertices.empty()))
    parse_fail(line, "explicit [polytope] needs dimension, facets and at least one vertex");
  if (!seen_lambda) parse_fail(line, "missing [lambda] section");
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::parse, "cannot open manifest '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifest(buf.str());
  } catch (const Error& e) {
    fail(e.kind(), path + ": " + e.what());
  }
}

std::string serialize_manifest(const Manifest& m) {
  std::ostringstream out;
  out << "[polytope]\n";
  if (!m.polytope.builtin.empty()) {
    out << "builtin = " << m.polytope.builtin << " " << join(m.polytope.params) << "\n";
  } else {
    out << "dimension = " << m.polytope.dimension << "\n";
    out << "facets = " << m.polytope.facets << "\n";
    for (const auto& v : m.polytope.vertices) out << "vertex = " << join({v.begin(), v.end()}) << "\n";
  }
  out << "\n[lambda]\n";
  for (const auto& r : m.lambda) out << "row = " << join(r) << "\n";
  if (m.gamma) out << "\n[spinc]\ngamma = " << join(*m.gamma) << "\n";
  if (!m.bundles.V.empty() || !m.bundles.W.empty()) {
    out << "\n[bundles]\n";
    for (const auto& v : m.bundles.V) out << "V = " << join(v) << "\n";
    for (const auto& w : m.bundles.W) out << "W = " << join(w) << "\n";
  }
  if (m.circle) out << "\n[circle]\nxi = " << join(*m.circle) << "\n";
  if (!m.classes.empty()) {
    out << "\n[classes]\n";
    for (const auto& x : m.classes) out << "x = " << join(x) << "\n";
  }
  return out.str();
}

SimplePolytope build_polytope(const PolytopeSource& source) {
  if (source.builtin.empty()) {
    std::vector<Vertex> vertices;
    for (const auto& v : source.vertices) {
      Vertex z;
      for (int f : v) z.push_back(f - 1);
      vertices.push_back(z);
    }
    return SimplePolytope(source.dimension, source.facets, std::move(vertices));
  }
  const auto& p = source.params;
  auto arity = [&](size_t count) {
    require(p.size() == count, ErrorKind::parse,
            "builtin " + source.builtin + " takes " + std::to_string(count) + " parameter(s)");
  };
  auto small = [](long v) {
    require(v >= 1 && v <= 64, ErrorKind::parse, "builtin parameter out of range");
    return static_cast<int>(v);
  };
  if (source.builtin == "simplex") {
    arity(1);
    return simplex(small(p[0]));
  }
  if (source.builtin == "cube") {
    arity(1);
    return cube(small(p[0]));
  }
  if (source.builtin == "polygon") {
    arity(1);
    return polygon(small(p[0]));
  }
  if (source.builtin == "simplex-chain") {
    arity(2);
    return simplex_chain(small(p[0]), small(p[1]));
  }
  fail(ErrorKind::parse, "unknown builtin polytope '" + source.builtin + "'");
}

QuasitoricManifold build_manifold(const Manifest& m) {
  const SimplePolytope p = build_polytope(m.polytope);
  const auto lambda = CharacteristicMatrix::from_rows(m.lambda);
  if (m.gamma) return {p, lambda, *m.gamma};
  return {p, lambda};
}

}  // namespace qtg
