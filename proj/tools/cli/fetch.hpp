#pragma once

#include <ostream>
#include <string>

#include "registry.hpp"

namespace lsc::cli {

struct FetchOutcome {
  std::string edge_list_path;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool matches_registry = false;
};

/// Downloads `entry` into `out_dir`, unpacks it with the system tar/unzip,
/// and writes a normalized edge list `<out_dir>/<name>.txt` (dense ids,
/// "# nodes" header) plus `<name>.labels` with the original tokens.
/// Any URL scheme libcurl understands works, including file://.
/// Throws lsc::Error on download, extraction or parse failure.
FetchOutcome fetch_dataset(const DatasetEntry& entry, const std::string& out_dir, std::ostream& log);

}  // namespace lsc::cli
