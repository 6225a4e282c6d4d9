// brauer - diagram semigroups and complexity bounds
//
// Line-oriented text cache for constructed families:
//
//   # brauer-cache v1
//   family B
//   degree 3
//   strategy generated
//   generators 3
//   <one encoded diagram per line>
//   elements 15
//   <one encoded diagram per line, sorted>
//   checksum <16 hex digits>
//
// The checksum is FNV-1a (64 bit) over every byte before the checksum line.

#ifndef BRAUER_CACHE_HPP_
#define BRAUER_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "families.hpp"

namespace brauer {

  constexpr int CACHE_FORMAT_VERSION = 1;

  std::uint64_t fnv1a64(std::string_view bytes);

  std::string serialize_cache(FamilyInstance const& instance);
  //! Throws VersionMismatch, ChecksumMismatch or ParseError.
  FamilyInstance parse_cache(std::string const& text);

  //! Writes to a temporary file in the same directory, then renames it.
  void           save_cache(FamilyInstance const&        instance,
                            std::filesystem::path const& path);
  FamilyInstance load_cache(std::filesystem::path const& path);

  //! "<family>-<n>.cache"
  std::string cache_file_name(FamilyId f, std::size_t n);

  //! $BRAUER_CACHE_DIR if set, otherwise ".brauer-cache".
  std::filesystem::path default_cache_dir();

  //! Loads the family from dir if a valid cache exists, otherwise builds and
  //! saves it. Files of another format version are rebuilt; corrupt files
  //! raise ChecksumMismatch or ParseError.
  FamilyInstance load_or_build(FamilyId                     f,
                               std::size_t                  n,
                               std::filesystem::path const& dir,
                               std::size_t                  budget,
                               bool*                        from_cache = nullptr);

}  // namespace brauer

#endif  // BRAUER_CACHE_HPP_
