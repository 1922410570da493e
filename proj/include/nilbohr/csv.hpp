#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilbohr {

// Minimal CSV quoting: fields containing comma, quote or newline are
// wrapped in double quotes with inner quotes doubled.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

// Comma-separated integer list (the on-disk form of P sequences and
// witnesses).
std::string join_ints(const std::vector<std::int64_t>& v);

// FNV-1a 64-bit, as lowercase hex. Stable across platforms, used for
// params hashes in reports.
std::string fnv1a_hex(const std::string& s);

}  // namespace nilbohr
