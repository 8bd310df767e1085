// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 CGPR Project Contributors

#pragma once

#include "cgpr/baselines.hpp"
#include "cgpr/bench.hpp"
#include "cgpr/config.hpp"
#include "cgpr/core.hpp"
#include "cgpr/csv.hpp"
#include "cgpr/fft.hpp"
#include "cgpr/kernels.hpp"
#include "cgpr/noise.hpp"
#include "cgpr/random.hpp"
#include "cgpr/regression.hpp"
#include "cgpr/signals.hpp"
#include "cgpr/simulate.hpp"
#include "cgpr/spectral.hpp"
#include "cgpr/stats.hpp"
