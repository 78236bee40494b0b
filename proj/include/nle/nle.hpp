// Umbrella header.

#pragma once

#include "nle/catalog.hpp"
#include "nle/dissect.hpp"
#include "nle/ensemble_io.hpp"
#include "nle/gates.hpp"
#include "nle/infobounds.hpp"
#include "nle/numkit.hpp"
#include "nle/optimize.hpp"
#include "nle/qstate.hpp"
#include "nle/quantify.hpp"
#include "nle/sampling.hpp"
