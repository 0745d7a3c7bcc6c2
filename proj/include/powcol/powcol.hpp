// Umbrella header.

#ifndef POWCOL_POWCOL_HPP_
#define POWCOL_POWCOL_HPP_

#include "coloring.hpp"
#include "error.hpp"
#include "families.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "magma.hpp"
#include "oracle.hpp"
#include "power_graph.hpp"
#include "symbolic.hpp"
#include "verify.hpp"

#endif  // POWCOL_POWCOL_HPP_
