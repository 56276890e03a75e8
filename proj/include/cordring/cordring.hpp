#pragma once

// Umbrella header for the cord-ring library: exact computation of degree-0
// knot and braid contact homology by braid closure, plat and diagram
// presentations, with canonicalization over Z.

#include "abelian.hpp"
#include "bigint.hpp"
#include "braid.hpp"
#include "cords.hpp"
#include "errors.hpp"
#include "intmatrix.hpp"
#include "invariants.hpp"
#include "linearized.hpp"
#include "ncalg.hpp"
#include "pdcode.hpp"
#include "phirep.hpp"
#include "ringforms.hpp"
#include "rng.hpp"
#include "twobridge.hpp"
#include "unipoly.hpp"
#include "verify.hpp"
