#pragma once

#include <string>

#include <json.hpp>

#include "kostka/shoji.hpp"

namespace kostka::jsonio {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& why) : std::runtime_error("bad system JSON: " + why) {}
};

/// Schema: {family, n, r, s0, eps_sign, engine, labels: [string],
/// blocks: [[int]], K: [[polystring]], Lambda: [[ratstring]]}.
nlohmann::json system_to_json(const shoji::KostkaSystem& ks);
shoji::KostkaSystem system_from_json(const nlohmann::json& j);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a partial file. Throws std::runtime_error on I/O failure.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace kostka::jsonio
