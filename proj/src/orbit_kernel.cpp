#include "bt/orbit_kernel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bt {

TranslateTable translate_serial(const std::vector<Mat2>& gs, const std::vector<BtVertex>& base)
{
    TranslateTable out(gs.size());
    for (size_t w = 0; w < gs.size(); ++w) {
        out[w].reserve(base.size());
        for (const auto& v : base) out[w].push_back(act(gs[w], v));
    }
    return out;
}

TranslateTable translate_parallel(const std::vector<Mat2>& gs, const std::vector<BtVertex>& base)
{
    TranslateTable out(gs.size());
    std::exception_ptr failure;
    const auto n = static_cast<long>(gs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long w = 0; w < n; ++w) {
        try {
            auto& row = out[static_cast<size_t>(w)];
            row.reserve(base.size());
            for (const auto& v : base) row.push_back(act(gs[static_cast<size_t>(w)], v));
        } catch (...) {
#pragma omp critical(bt_translate_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

int kernel_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace bt
