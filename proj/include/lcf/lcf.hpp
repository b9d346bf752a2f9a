#pragma once

// Umbrella header for the loosened-Collatz toolkit.

#include "lcf/arith.hpp"
#include "lcf/eval.hpp"
#include "lcf/geometry.hpp"
#include "lcf/monoid.hpp"
#include "lcf/search.hpp"
#include "lcf/serialize.hpp"
#include "lcf/tuple.hpp"
#include "lcf/walk.hpp"
