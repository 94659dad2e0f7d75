#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lsc::cli {

/// One row of data/registry.json.
struct DatasetEntry {
  std::string name;
  std::string bundled;    ///< file next to the registry, if shipped
  std::string generator;  ///< "ba:n:m:seed" for synthetic entries
  std::string url;
  std::string archive;    ///< "tar.bz2", "zip" or empty for a plain file
  std::string member;     ///< edge-list path inside the archive
  std::string format;     ///< "konect", "mtx" or "edges"
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double default_beta = 0.1;
};

struct Registry {
  std::string directory;  ///< where the registry file lives
  std::vector<DatasetEntry> datasets;

  const DatasetEntry* find(const std::string& name) const;
};

/// Throws lsc::Error if the file is missing or malformed.
Registry load_registry(const std::string& path);

/// Beta for datasets without a registry entry: 0.1 below 1000 nodes, 0.01 otherwise.
double fallback_beta(std::size_t node_count);

}  // namespace lsc::cli
