#pragma once

// Umbrella header for the whole toolkit.

#include "common.hpp"     // IWYU pragma: export
#include "finrel.hpp"     // IWYU pragma: export
#include "finpinj.hpp"    // IWYU pragma: export
#include "fdhilb.hpp"     // IWYU pragma: export
#include "boolhat.hpp"    // IWYU pragma: export
#include "core.hpp"       // IWYU pragma: export
#include "lattice.hpp"    // IWYU pragma: export
#include "logic.hpp"      // IWYU pragma: export
#include "homset_order.hpp"  // IWYU pragma: export
#include "kck.hpp"        // IWYU pragma: export
#include "functors.hpp"   // IWYU pragma: export
#include "io.hpp"         // IWYU pragma: export
#include "laws.hpp"       // IWYU pragma: export
#include "suite.hpp"      // IWYU pragma: export
