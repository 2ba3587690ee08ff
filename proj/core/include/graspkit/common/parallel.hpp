// SPDX-FileCopyrightText: 2026 graspkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace grasp {

// Runs fn(i) for i in [0, n). With threads > 1 the index range is split into
// contiguous blocks, one worker per block. Each index must write only to its
// own output slot; under that discipline results are identical to the serial
// run regardless of thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace grasp
