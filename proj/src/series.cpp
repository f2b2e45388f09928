#include "tangles/series.hpp"

namespace tangles {

namespace {
constexpr const char* kVarNames[] = {"g", "tau", "b0", "s", "q", "l", "t"};
}

const char* var_name(Var v) {
    return kVarNames[static_cast<int>(v)];
}

Var parse_var(const std::string& s) {
    for (int i = 0; i < 7; ++i) {
        if (s == kVarNames[i]) return static_cast<Var>(i);
    }
    throw ParseError("unknown series variable: " + s);
}

} // namespace tangles
