#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ubseq/sieve.hpp"

namespace ubseq {

/// On-disk layout: "UBSEQ\0v1", max_n (u64 LE), Omega[1..max_n], omega[1..max_n],
/// mu[1..max_n] (signed), square-free bitset (bit n-1 of byte (n-1)/8, LSB first),
/// then the 64-bit FNV-1a hash (LE) of every preceding byte.
void write_sieve_cache(const std::string& path, const ArithmeticFunctionTable& table);

/// Throws ChecksumError on a bad magic, truncation or hash mismatch, Error when
/// the file cannot be opened.
ArithmeticFunctionTable read_sieve_cache(const std::string& path);

/// Serves 1..max_n from the cache when it covers the range. Otherwise sieves
/// and rewrites the cache; a corrupt cache is reported on `warnings` and rebuilt.
ArithmeticFunctionTable load_or_build_sieve(const std::string& path, std::uint64_t max_n,
                                            std::ostream& warnings);

std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t state = 0xcbf29ce484222325ull);

}  // namespace ubseq
