#pragma once

#include "chevex/chevalley.hpp"

namespace chevex {

class CacheVersionError : public std::runtime_error {
 public:
  explicit CacheVersionError(const std::string& w) : std::runtime_error(w) {}
};

class CacheChecksumError : public std::runtime_error {
 public:
  explicit CacheChecksumError(const std::string& w) : std::runtime_error(w) {}
};

struct CachedTable {
  std::string type;  // e.g. "B3"
  Field field;
  LieAlgebra lie;
  std::vector<std::vector<long>> coroots;
};

inline constexpr int kCacheFormatVersion = 1;

std::string cache_file_name(const std::string& type, const Field& f);

/// Versioned flat file: header, one record per nonzero structure constant,
/// the coroot expansion table, then an FNV-1a checksum of the payload.
/// Writing is canonical, so write -> read -> write is byte-identical.
void write_table_cache(const ChevalleyAlgebra& a, const std::string& path);
std::string render_table_cache(const ChevalleyAlgebra& a);

CachedTable read_table_cache(const std::string& path);

}  // namespace chevex
