#pragma once

#include <vector>

#include "bt/tree.hpp"

namespace bt {

/// images[w][i] = gs[w] applied to base[i].
using TranslateTable = std::vector<std::vector<BtVertex>>;

TranslateTable translate_serial(const std::vector<Mat2>& gs, const std::vector<BtVertex>& base);
/// Same result as translate_serial; words are spread over OpenMP threads.
TranslateTable translate_parallel(const std::vector<Mat2>& gs, const std::vector<BtVertex>& base);

int kernel_threads();

}  // namespace bt
