#pragma once

#include "regressive/cnf.hpp"
#include "regressive/construction.hpp"
#include "regressive/hierarchy.hpp"
#include "regressive/natural.hpp"
#include "regressive/nu.hpp"
#include "regressive/pair_coloring.hpp"
#include "regressive/pairing.hpp"
#include "regressive/reduction.hpp"
#include "regressive/search.hpp"

namespace regressive {
inline constexpr const char* version = "0.1.0";
}
