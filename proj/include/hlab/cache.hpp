#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hlab/characters.hpp"
#include "hlab/hurwitz.hpp"

namespace hlab {

/// Cache directory: $HLAB_CACHE_DIR, default ".hlab-cache".
std::filesystem::path cache_dir();

/// Entry format: JSON with kind, key, schema_version, payload (decimal
/// strings, canonical partition order) and an FNV-1a checksum of the
/// payload. Writes are atomic (temp file + rename); bad checksum or
/// version mismatch reads as a miss.
inline constexpr int kCacheSchemaVersion = 1;

std::optional<CharacterTable> load_character_table(int d);
void store_character_table(const CharacterTable& table);

std::optional<HurwitzTable> load_hurwitz_table(int mode, bool connected, int d_max,
                                               int genus_max);
void store_hurwitz_table(const HurwitzTable& table);

/// Install the disk cache as the character-table loader (idempotent).
void install_cache();

/// Cached table builders: exact-cover cache hit, else compute and store.
HurwitzTable cached_disconnected_table(int mode, int d_max, int genus_max);
HurwitzTable cached_connected_table(int mode, int d_max, int genus_max);

}  // namespace hlab
