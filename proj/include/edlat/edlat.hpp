#pragma once

// Umbrella header for the early-detection latency toolkit.

#include "edlat/cli/config.hpp"
#include "edlat/cli/figures.hpp"
#include "edlat/cli/table.hpp"
#include "edlat/detect/campaign.hpp"
#include "edlat/detect/codebook.hpp"
#include "edlat/errors.hpp"
#include "edlat/fbl/channel.hpp"
#include "edlat/fbl/stopping.hpp"
#include "edlat/multihop/latency.hpp"
#include "edlat/numerics/hadamard.hpp"
#include "edlat/numerics/qfunc.hpp"
#include "edlat/numerics/quadrature.hpp"
#include "edlat/numerics/rng.hpp"
