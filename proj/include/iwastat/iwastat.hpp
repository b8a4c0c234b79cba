#ifndef IWASTAT_IWASTAT_HPP
#define IWASTAT_IWASTAT_HPP

// Umbrella header.

#include "iwastat/arith.hpp"
#include "iwastat/classgroup.hpp"
#include "iwastat/cldensity.hpp"
#include "iwastat/iwasawa.hpp"
#include "iwastat/randmatrix.hpp"
#include "iwastat/sweep.hpp"

#endif // IWASTAT_IWASTAT_HPP
