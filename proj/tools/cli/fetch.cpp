#include "fetch.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <curl/curl.h>

#include "lsc/edge_list.hpp"
#include "lsc/error.hpp"

namespace lsc::cli {
namespace fs = std::filesystem;
namespace {

std::size_t write_to_file(char* data, std::size_t size, std::size_t count, void* user) {
  return std::fwrite(data, size, count, static_cast<std::FILE*>(user));
}

void download(const std::string& url, const fs::path& dest) {
  std::FILE* file = std::fopen(dest.c_str(), "wb");
  if (file == nullptr) throw Error("cannot write " + dest.string());
  CURL* curl = curl_easy_init();
  if (curl == nullptr) {
    std::fclose(file);
    throw Error("libcurl initialisation failed");
  }
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, write_to_file);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, file);
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 30L);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  std::fclose(file);
  if (rc != CURLE_OK) {
    fs::remove(dest);
    throw Error("download of " + url + " failed: " + curl_easy_strerror(rc));
  }
}

std::string quoted(const fs::path& p) {
  std::string out = "'";
  for (char c : p.string()) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

void extract(const DatasetEntry& entry, const fs::path& archive, const fs::path& into) {
  fs::create_directories(into);
  std::string cmd;
  if (entry.archive == "tar.bz2") {
    cmd = "tar -xjf " + quoted(archive) + " -C " + quoted(into);
  } else if (entry.archive == "tar.gz") {
    cmd = "tar -xzf " + quoted(archive) + " -C " + quoted(into);
  } else if (entry.archive == "zip") {
    // unzip is not always installed; Python's zipfile module is the fallback.
    cmd = "if command -v unzip >/dev/null 2>&1; then unzip -o -q " + quoted(archive) + " -d " + quoted(into) +
          "; else python3 -m zipfile -e " + quoted(archive) + " " + quoted(into) + "; fi";
  } else {
    throw Error("unsupported archive type '" + entry.archive + "' for " + entry.name);
  }
  if (std::system(cmd.c_str()) != 0) throw Error("extraction failed: " + cmd);
}

}  // namespace

FetchOutcome fetch_dataset(const DatasetEntry& entry, const std::string& out_dir, std::ostream& log) {
  if (entry.url.empty()) throw Error("dataset " + entry.name + " has no download URL");
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  fs::path raw;
  if (entry.archive.empty()) {
    raw = dir / (entry.name + ".raw");
    download(entry.url, raw);
  } else {
    const fs::path archive = dir / (entry.name + "." + entry.archive);
    download(entry.url, archive);
    const fs::path unpacked = dir / (entry.name + "_raw");
    extract(entry, archive, unpacked);
    raw = unpacked / entry.member;
    if (!fs::exists(raw)) throw Error("archive for " + entry.name + " has no member " + entry.member);
  }

  EdgeListOptions opts;
  opts.relabel = true;
  opts.allow_extra_columns = true;
  // MatrixMarket files carry a "rows cols nnz" line after the banner.
  opts.skip_lines = entry.format == "mtx" ? 1 : 0;
  const auto loaded = load_edge_list_file(raw.string(), opts);

  FetchOutcome out;
  out.edge_list_path = (dir / (entry.name + ".txt")).string();
  out.nodes = loaded.graph.node_count();
  out.edges = loaded.graph.edge_count();
  out.matches_registry = out.nodes == entry.nodes && out.edges == entry.edges;
  {
    std::ofstream f(out.edge_list_path);
    write_edge_list(f, loaded.graph);
  }
  {
    std::ofstream f(dir / (entry.name + ".labels"));
    for (const auto& label : loaded.labels) f << label << '\n';
  }
  log << entry.name << ": " << out.nodes << " nodes, " << out.edges << " edges";
  if (loaded.dropped.self_loops + loaded.dropped.duplicates > 0) {
    log << " (dropped " << loaded.dropped.self_loops << " self-loops, " << loaded.dropped.duplicates
        << " duplicates)";
  }
  if (!out.matches_registry) log << " [registry expects " << entry.nodes << "/" << entry.edges << "]";
  log << " -> " << out.edge_list_path << '\n';
  return out;
}

}  // namespace lsc::cli
