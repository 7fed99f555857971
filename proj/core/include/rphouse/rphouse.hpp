#pragma once

// Umbrella header for the full library surface.

#include "rphouse/assignment.hpp"
#include "rphouse/cli.hpp"
#include "rphouse/consistency.hpp"
#include "rphouse/housing.hpp"
#include "rphouse/indices.hpp"
#include "rphouse/lp.hpp"
#include "rphouse/model.hpp"
#include "rphouse/rationalize.hpp"
