#pragma once

#include "km/analysis.hpp"
#include "km/coxeter.hpp"
#include "km/error.hpp"
#include "km/gcm.hpp"
#include "km/parabolics.hpp"
#include "km/roots.hpp"
#include "km/subset.hpp"
#include "km/weyl.hpp"
