// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "swipt/harness.hpp"

namespace swipt::harness::detail {

RunResult selftest(const Config& cfg);

}  // namespace swipt::harness::detail
