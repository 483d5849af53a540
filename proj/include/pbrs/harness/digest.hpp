#pragma once

#include <string>

namespace pbrs {

/// Lowercase hex SHA-256 of a byte string. Used to fingerprint canonicalized
/// experiment configurations so result files from different configs can never
/// be mixed silently.
std::string sha256_hex(const std::string& bytes);

}  // namespace pbrs
