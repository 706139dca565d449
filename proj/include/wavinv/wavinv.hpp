// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include "wavinv/version.hpp"
#include "wavinv/error.hpp"
#include "wavinv/random.hpp"

#include "wavinv/wavelet/besov.hpp"
#include "wavinv/wavelet/coeff_vector.hpp"
#include "wavinv/wavelet/dwt.hpp"
#include "wavinv/wavelet/filter.hpp"
#include "wavinv/wavelet/multi_index.hpp"

#include "wavinv/operators/build.hpp"
#include "wavinv/operators/galerkin_matrix.hpp"
#include "wavinv/operators/kernel.hpp"
#include "wavinv/operators/matrix_io.hpp"
#include "wavinv/operators/noise.hpp"
#include "wavinv/operators/norms.hpp"

#include "wavinv/simulate/bundle.hpp"
#include "wavinv/simulate/observation.hpp"
#include "wavinv/simulate/signal.hpp"

#include "wavinv/estimators/estimate.hpp"
#include "wavinv/estimators/level_rule.hpp"
#include "wavinv/estimators/linear.hpp"
#include "wavinv/estimators/nonlinear.hpp"
#include "wavinv/estimators/rates.hpp"
#include "wavinv/estimators/thresholding.hpp"

#include "wavinv/harness/config.hpp"
#include "wavinv/harness/methods.hpp"
#include "wavinv/harness/monte_carlo.hpp"
#include "wavinv/harness/rate_fit.hpp"
#include "wavinv/harness/report.hpp"
#include "wavinv/harness/rmse.hpp"
