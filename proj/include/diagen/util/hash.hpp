#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace diagen::util {

/// Incremental SHA-256 (FIPS 180-4). Self-contained so the engine has no
/// crypto-library dependency for content digests.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, std::size_t len);
  void update(std::string_view s) { update(s.data(), s.size()); }
  std::array<std::uint8_t, 32> finish();

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t h_[8];
  std::uint8_t buffer_[64];
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
};

/// Hex digest of a full buffer.
std::string sha256_hex(std::string_view data);

/// Seed for a named generation stream: first 8 bytes (little-endian) of
/// SHA-256(master || name || index). Decouples records from one another so
/// any worker count produces the same stream per record.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view stream_name,
                          std::uint64_t index);

}  // namespace diagen::util
