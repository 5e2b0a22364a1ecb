#pragma once

#include <string>

#include "bt/admissibility.hpp"
#include "bt/pgl2.hpp"
#include "bt/realization.hpp"
#include "json.hpp"

namespace bt {

// Exit codes shared by the command-line tool and the acceptance driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitUsage = 64;

struct RunResult {
    nlohmann::json report;
    std::string orbit_dot;
    std::string quotient_dot;
    int exit_code = kExitOk;
};

nlohmann::json field_report(const Field& F);
nlohmann::json classify_report(const Pgl2& g);

RunResult run_check(const EmbeddingSpec& spec, int L, long R);
RunResult run_realize(const EmbeddingSpec& spec, int L, long R, Kernel kernel = Kernel::Parallel);
/// check followed by realize; the reports are merged.
RunResult run_pipeline(const EmbeddingSpec& spec, int L, long R, Kernel kernel = Kernel::Parallel);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace bt
