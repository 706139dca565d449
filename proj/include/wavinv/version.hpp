// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

namespace wavinv {
inline constexpr const char* kVersion = "0.1.0";
}
