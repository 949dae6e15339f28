#pragma once
// Umbrella header.

#include "engine.hpp"      // IWYU pragma: export
#include "graph.hpp"       // IWYU pragma: export
#include "grounder.hpp"    // IWYU pragma: export
#include "literal.hpp"     // IWYU pragma: export
#include "oracle.hpp"      // IWYU pragma: export
#include "parser.hpp"      // IWYU pragma: export
#include "qa.hpp"          // IWYU pragma: export
#include "semantics.hpp"   // IWYU pragma: export
#include "story.hpp"       // IWYU pragma: export
#include "tuple.hpp"       // IWYU pragma: export
#include "unit_argument.hpp"  // IWYU pragma: export
