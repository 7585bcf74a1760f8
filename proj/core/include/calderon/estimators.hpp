#pragma once

// Spectral-truncation estimator, the associated chi-square test and rate
// bookkeeping.

#include "calderon/measurement.hpp"
#include "calderon/spectral.hpp"

namespace calderon {

/// Lambda_hat = pi_JJ(Y), returned in the full data shape (zeros beyond J).
OperatorMatrix truncation_estimator(const SpectralData& data, int J);

/// eps sqrt(J^2 + 2 J sqrt(x) + 2x): the level exceeded by eps ||g||_{JxJ}
/// with probability at most e^{-x}.
double chi2_threshold(double eps, int J, double x);

/// 1{ ||Lambda_hat - pi_JJ gamma0|| > threshold }.
int test_statistic(const SpectralData& data, const OperatorMatrix& gamma0_matrix, int J, double threshold);

/// J_eps = floor(eta / eps) with eta = eps^{alpha/(alpha+2)}.
int truncation_level(double eps, int alpha);

/// log(1/eps)^{-delta}.
double contraction_rate(double eps, double delta);

} // namespace calderon
