#pragma once

#include "hksum/asymptotics.hpp"
#include "hksum/channel.hpp"
#include "hksum/core_rates.hpp"
#include "hksum/format.hpp"
#include "hksum/optimizers.hpp"
#include "hksum/region_map.hpp"
#include "hksum/solvers.hpp"
#include "hksum/svg.hpp"
#include "hksum/verify.hpp"
