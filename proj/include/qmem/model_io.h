// Copyright 2026 The qmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMEM_MODEL_IO_H
#define QMEM_MODEL_IO_H

#include <string>
#include <string_view>

#include "qmem/code_model.h"

namespace qmem {

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON document:
///   {"format": "qmem.code_model", "version": 1, "family": ..., "n": ...,
///    "delta": ..., "classical": ..., "gauge_only": ..., "boundary": ...,
///    "dimension": ..., "linear_size": ...,
///    "checks": [{"type": "Z"|"X", "qubits": [...], "location": [...]}, ...],
///    "logicals": [{"X": "IXX...", "Z": "ZII..."}, ...]}
std::string model_to_json(const CodeModel &m, int indent = -1);
/// Throws std::invalid_argument on malformed or unsupported documents.
CodeModel model_from_json(std::string_view text);

}  // namespace qmem

#endif
