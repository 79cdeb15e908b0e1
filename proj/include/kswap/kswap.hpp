#pragma once

#include "kswap/types.hpp"
#include "kswap/core.hpp"
#include "kswap/subsets.hpp"
#include "kswap/neighborhood.hpp"
#include "kswap/derand.hpp"
#include "kswap/driver.hpp"
#include "kswap/generators.hpp"
#include "kswap/oracle.hpp"
#include "kswap/io.hpp"
#include "kswap/seed.hpp"
#include "kswap/bench.hpp"
