#pragma once

// Umbrella header for the finite-ring workbench.

#include "finring/constructions.hpp"
#include "finring/errors.hpp"
#include "finring/morita.hpp"
#include "finring/predicates.hpp"
#include "finring/report.hpp"
#include "finring/ring.hpp"
#include "finring/ring_ops.hpp"
#include "finring/specparse.hpp"
#include "finring/tableio.hpp"
#include "finring/theorems.hpp"
