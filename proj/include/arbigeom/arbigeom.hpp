#pragma once

#include "arbigeom/arbitrage.hpp"
#include "arbigeom/arrangement.hpp"
#include "arbigeom/cones.hpp"
#include "arbigeom/matrix.hpp"
#include "arbigeom/matrix_io.hpp"
#include "arbigeom/montecarlo.hpp"
#include "arbigeom/pricing.hpp"
#include "arbigeom/rational.hpp"
#include "arbigeom/sign_vector.hpp"
#include "arbigeom/simplex.hpp"
