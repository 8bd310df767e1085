// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#include <catch2/catch_amalgamated.hpp>

#include "cgpr/cgpr.hpp"
