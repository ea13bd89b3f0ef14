#include "jordanlab/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string payload_digest(const MultiDegree& d, size_t ncols,
                           const std::vector<std::vector<std::string>>& rows) {
  uint64_t h = fnv1a("component|v" + std::to_string(kCacheFormatVersion) +
                     "|" + d.str() + "|" + std::to_string(ncols));
  for (const auto& row : rows)
    for (const auto& cell : row) h = fnv1a(cell, h);
  return hex64(h);
}

}  // namespace

std::string cache_component_path(const std::string& dir,
                                 const MultiDegree& d) {
  std::string key;
  for (size_t i = 0; i < d.counts().size(); ++i) {
    if (i) key += "_";
    key += std::to_string(d.counts()[i]);
  }
  if (key.empty()) key = "0";
  uint64_t tag = fnv1a("jordanlab-component|v" +
                       std::to_string(kCacheFormatVersion) + "|" + d.str());
  return dir + "/component-v" + std::to_string(kCacheFormatVersion) + "-" +
         key + "-" + hex64(tag).substr(0, 8) + ".cbor";
}

std::optional<CachedComponent> cache_load_component(const std::string& dir,
                                                    const MultiDegree& d,
                                                    size_t ncols) {
  std::string path = cache_component_path(dir, d);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    j = nlohmann::json::from_cbor(bytes);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::CacheCorrupt, "unreadable cache file " + path);
  }
  std::vector<std::vector<std::string>> rows;
  try {
    if (!j.contains("format_version") || !j["format_version"].is_number() ||
        j["format_version"].get<int>() != kCacheFormatVersion) {
      std::cerr << "jordanlab: discarding cache file with unexpected format "
                   "version: "
                << path << "\n";
      return std::nullopt;
    }
    if (j["ncols"].get<size_t>() != ncols ||
        MultiDegree(j["degree"].get<std::vector<int>>()) != d)
      throw Error(ErrorCode::CacheCorrupt,
                  "cache descriptor mismatch in " + path);
    rows = j["rows"].get<std::vector<std::vector<std::string>>>();
    if (j["checksum"].get<std::string>() != payload_digest(d, ncols, rows))
      throw Error(ErrorCode::CacheCorrupt, "checksum mismatch in " + path);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::CacheCorrupt, "undecodable cache file " + path);
  }

  CachedComponent out;
  out.rref = ExactRref(static_cast<int>(ncols));
  out.prime_agreement = j["prime_agreement"].get<bool>();
  for (const auto& row : rows) {
    SparseVecQ v;
    v.reserve(row.size() / 2);
    for (size_t i = 0; i + 1 < row.size(); i += 2) {
      Rat val;
      if (!rat_parse(row[i + 1], val))
        throw Error(ErrorCode::CacheCorrupt, "bad rational in " + path);
      v.emplace_back(std::stoi(row[i]), val);
    }
    out.rref.add_row(v);
  }
  out.rref.finalize();
  return out;
}

void cache_store_component(const std::string& dir, const MultiDegree& d,
                           size_t ncols, const ExactRref& rref,
                           bool prime_agreement) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(rref.rank());
  for (const auto& row : rref.rows()) {
    std::vector<std::string> r;
    r.reserve(row.size() * 2);
    for (const auto& [col, val] : row) {
      r.push_back(std::to_string(col));
      r.push_back(rat_str(val));
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["format_version"] = kCacheFormatVersion;
  j["kind"] = "component";
  j["degree"] = d.counts();
  j["ncols"] = ncols;
  j["prime_agreement"] = prime_agreement;
  j["rows"] = rows;
  j["checksum"] = payload_digest(d, ncols, rows);

  std::string path = cache_component_path(dir, d);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    auto bytes = nlohmann::json::to_cbor(j);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace jordanlab
