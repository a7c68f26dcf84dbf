#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "odisc/linalg.hpp"
#include "odisc/oracle.hpp"

namespace odisc {

enum class ChannelMethod { Closed, BruteForce };

std::string to_string(ChannelMethod m);

struct ChannelReport {
  DensityOperator output;
  ChannelMethod method;
  std::uint64_t functions_used;
  std::string weights;  // description of the p_f distribution used
};

// Constant-class channel: every constant oracle acts as the identity.
DensityOperator channel_constant(const DensityOperator& rho);

// Balanced-class channel in closed form, valid for uniform p_f = 1/B:
// diagonal entries kept, off-diagonal entries scaled by -1/(N-1).
DensityOperator channel_balanced_closed(const DensityOperator& rho);

// Balanced-class channel by explicit enumeration and sign-mask conjugation:
// sum_f p_f U_f rho U_f^dag. Empty `weights` means uniform 1/B; otherwise one
// probability per balanced function in enumeration order, nonnegative and
// summing to 1 within tol. The sum is chunked and Kahan-compensated; results
// are independent of the worker count.
ChannelReport channel_balanced_bruteforce(const DensityOperator& rho,
                                          std::span<const double> weights = {},
                                          int cap = kEnumerationCap,
                                          double tol = kDefaultTol);

}  // namespace odisc
