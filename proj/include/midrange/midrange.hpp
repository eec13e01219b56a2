#pragma once

// Umbrella header: affine-invariant midrange statistics on the SPD cone.

#include "midrange/cholesky.hpp"
#include "midrange/dense.hpp"
#include "midrange/eig.hpp"
#include "midrange/errors.hpp"
#include "midrange/gen_eig.hpp"
#include "midrange/matrix_functions.hpp"
#include "midrange/matrix_midrange.hpp"
#include "midrange/metrics.hpp"
#include "midrange/midpoints.hpp"
#include "midrange/random.hpp"
#include "midrange/spd_matrix.hpp"
#include "midrange/sym_matrix.hpp"
#include "midrange/tolerances.hpp"
#include "midrange/vector_midrange.hpp"
