#include "registry.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "lsc/error.hpp"

namespace lsc::cli {

const DatasetEntry* Registry::find(const std::string& name) const {
  for (const auto& d : datasets)
    if (d.name == name) return &d;
  return nullptr;
}

Registry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open registry " + path);
  Registry reg;
  reg.directory = std::filesystem::path(path).parent_path().string();
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& e : j.at("datasets")) {
      DatasetEntry d;
      d.name = e.at("name").get<std::string>();
      d.bundled = e.value("bundled", "");
      d.generator = e.value("generator", "");
      d.url = e.value("url", "");
      d.archive = e.value("archive", "");
      d.member = e.value("member", "");
      d.format = e.value("format", "edges");
      d.nodes = e.value("nodes", std::size_t{0});
      d.edges = e.value("edges", std::size_t{0});
      d.default_beta = e.value("default_beta", 0.1);
      reg.datasets.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed registry " + path + ": " + e.what());
  }
  return reg;
}

double fallback_beta(std::size_t node_count) { return node_count < 1000 ? 0.1 : 0.01; }

}  // namespace lsc::cli
