// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "superfock/orthogroup.hpp"

namespace superfock::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kValidation = 1, kInput = 2, kAmbiguous = 3 };

/// Parse or I/O failure; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
/// {"rows", "cols", "data"} with row-major [re, im] entries.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// Unvalidated (U, V) pair from a transform or implementer file.
struct TransformFile {
  Matrix u, v;
  /// Present when the file carries a serialized implementer.
  Matrix t;
  bool has_t = false;
};

TransformFile read_transform(const std::string& path);
json transform_to_json(const Matrix& u, const Matrix& v);

struct SelftestConfig {
  int modes = 3;
  int generators = 3;
  std::uint64_t seed = 1;
  Real tol = 1e-9;
};

/// Fills report["residuals"], report["checks"] and warnings; returns true if every check passed.
bool selftest(const SelftestConfig& cfg, json& report);

/// Entry point; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superfock::cli
