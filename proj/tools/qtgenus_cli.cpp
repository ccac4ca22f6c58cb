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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtgenus/qtgenus.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kInvalid = 2, kUnmet = 3 };

int exit_for(qtg_status s) {
  switch (s) {
    case QTG_OK:
      return kOk;
    case QTG_INVALID_INPUT:
      return kInvalid;
    case QTG_UNMET:
      return kUnmet;
    default:
      return kViolation;
  }
}

int report_error(qtg_status s) {
  std::cerr << "error: " << qtg_last_error() << "\n";
  return exit_for(s);
}

struct Owned {
  char* s = nullptr;
  ~Owned() { qtg_string_free(s); }
};

struct Manifest {
  qtg_manifest* m = nullptr;
  ~Manifest() { qtg_manifest_free(m); }
};

std::optional<std::vector<long>> parse_vector(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  std::vector<long> out;
  long v;
  while (in >> v) out.push_back(v);
  if (!in.eof() || out.empty()) return std::nullopt;
  return out;
}

int outcome_exit(const Json& j) {
  const std::string outcome = j.value("outcome", "pass");
  if (outcome == "pass") return kOk;
  if (outcome == "hypothesis_unmet") return kUnmet;
  return kViolation;
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_fields(const Json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "outcome" || key == "theorem") continue;
    std::cout << "  " << key << " = " << scalar(value) << "\n";
  }
}

int load(const std::string& path, Manifest& out) {
  const qtg_status s = qtg_manifest_load(path.c_str(), &out.m);
  if (s != QTG_OK) return report_error(s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genera and vanishing checks for quasitoric manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qtg_version()));

  int q_order = 3;
  if (const char* env = std::getenv("GENUS_QORDER_DEFAULT")) {
    try {
      q_order = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: GENUS_QORDER_DEFAULT must be an integer\n";
      return kInvalid;
    }
  }
  std::string path, twist = "none", engine = "localization", equivariant, theorem;
  bool json = false;
  int threads = 1, n = 3, k = 1, bound = 1;

  auto* describe = app.add_subcommand("describe", "Invariants of a manifold manifest");
  describe->add_option("manifest", path, "Manifest file")->required();
  describe->add_flag("--json", json, "Print the JSON report");

  auto* format = app.add_subcommand("format", "Print a manifest in normal form");
  format->add_option("manifest", path, "Manifest file")->required();

  auto* genus = app.add_subcommand("genus", "Twisted Dirac index as a q-series");
  genus->add_option("manifest", path, "Manifest file")->required();
  genus->add_option("--twist", twist, "Twist")
      ->check(CLI::IsMember({"none", "elliptic", "witten", "signature", "custom"}));
  genus->add_option("--q-order", q_order, "Highest power of q")->check(CLI::NonNegativeNumber);
  genus->add_option("--equivariant", equivariant, "Circle xi, e.g. \"1,2\"");
  genus->add_option("--engine", engine, "Engine")->check(CLI::IsMember({"localization", "cohomological"}));
  genus->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  genus->add_flag("--json", json, "Print the JSON report");

  auto* verify = app.add_subcommand("verify", "Check a theorem on a manifest");
  verify->add_option("manifest", path, "Manifest file (not needed for table1)");
  verify->add_option("--theorem", theorem, "Check")
      ->required()
      ->check(CLI::IsMember({"circle", "index-I", "thm34", "lemma52", "table1"}));
  verify->add_option("--q-order", q_order, "Highest power of q")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Print the JSON report");

  auto* census = app.add_subcommand("census", "Beta vectors over connected sums of simplices");
  census->add_option("--n", n, "Dimension")->required();
  census->add_option("--k", k, "Number of summands")->required();
  census->add_option("--bound", bound, "Entry bound")->required()->check(CLI::NonNegativeNumber);
  census->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--json", json, "Print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  Owned out;
  Manifest manifest;

  if (*describe) {
    if (int rc = load(path, manifest)) return rc;
    if (qtg_status s = qtg_describe(manifest.m, &out.s); s != QTG_OK) return report_error(s);
    const Json j = Json::parse(out.s);
    if (json) {
      std::cout << out.s << "\n";
      return kOk;
    }
    std::cout << "n=" << j["n"] << " m=" << j["m"] << " χ=" << j["chi"] << " b₂=" << j["b2"]
              << " p₁=" << scalar(j["p1"]) << " spin=" << (j["spin"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "betti = " << j["betti"].dump() << "\n";
    std::cout << "c1 spin^c = " << scalar(j["spinc_c1"]) << "\n";
    if (j.contains("spin_obstruction")) std::cout << scalar(j["spin_obstruction"]) << "\n";
    return kOk;
  }

  if (*format) {
    if (int rc = load(path, manifest)) return rc;
    if (qtg_status s = qtg_manifest_serialize(manifest.m, &out.s); s != QTG_OK) return report_error(s);
    std::cout << out.s;
    return kOk;
  }

  if (*genus) {
    if (int rc = load(path, manifest)) return rc;
    std::vector<long> xi;
    if (!equivariant.empty()) {
      auto v = parse_vector(equivariant);
      if (!v) {
        std::cerr << "error: --equivariant expects integers such as \"1,2\"\n";
        return kInvalid;
      }
      xi = *v;
    }
    const qtg_genus_options opts{twist.c_str(), q_order, xi.empty() ? nullptr : xi.data(), xi.size(),
                                 engine.c_str(), threads};
    if (qtg_status s = qtg_genus(manifest.m, &opts, &out.s); s != QTG_OK) return report_error(s);
    if (json) {
      std::cout << out.s << "\n";
      return kOk;
    }
    const Json j = Json::parse(out.s);
    const auto& c = j["coefficients"];
    for (size_t i = 0; i < c.size(); ++i) std::cout << "q^" << i << ": " << scalar(c[i]) << "\n";
    return kOk;
  }

  if (*verify) {
    if (!path.empty()) {
      if (int rc = load(path, manifest)) return rc;
    }
    if (qtg_status s = qtg_verify(manifest.m, theorem.c_str(), q_order, threads, &out.s); s != QTG_OK)
      return report_error(s);
    const Json j = Json::parse(out.s);
    if (json) {
      std::cout << out.s << "\n";
    } else {
      const std::string outcome = j["outcome"];
      std::cout << theorem << ": " << (outcome == "pass" ? "PASS" : outcome == "violation" ? "FAIL" : "HYPOTHESIS UNMET")
                << "\n";
      if (theorem == "table1") {
        std::cout << "  " << j["matches"] << "/30 match\n";
      } else {
        print_fields(j);
      }
    }
    return outcome_exit(j);
  }

  if (qtg_status s = qtg_census(n, k, bound, threads, &out.s); s != QTG_OK) return report_error(s);
  const Json j = Json::parse(out.s);
  if (json) {
    std::cout << out.s << "\n";
  } else {
    std::cout << "census n=" << n << " k=" << k << " bound=" << bound << ": "
              << (j["outcome"] == "pass" ? "PASS" : "FAIL") << "\n";
    print_fields(j);
  }
  return outcome_exit(j);
}
