#pragma once

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace cds2m::log {

// 0 = silent, 1 = info, 2 = trace. Set once at startup (CLI reads CDS2M_LOG);
// readers only need relaxed loads.
inline std::atomic<int>& level() {
    static std::atomic<int> lvl{0};
    return lvl;
}

inline void set_level(int lvl) { level().store(lvl, std::memory_order_relaxed); }

inline bool info_enabled() { return level().load(std::memory_order_relaxed) >= 1; }
inline bool trace_enabled() { return level().load(std::memory_order_relaxed) >= 2; }

inline std::ostream& out() { return std::cerr; }

// Parses the CDS2M_LOG environment variable: "", "0" -> silent,
// "1"/"info" -> info, "2"/"trace" -> trace.
inline int level_from_env() {
    const char* v = std::getenv("CDS2M_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s.empty() || s == "0") return 0;
    if (s == "1" || s == "info") return 1;
    if (s == "2" || s == "trace") return 2;
    return 1;
}

} // namespace cds2m::log
