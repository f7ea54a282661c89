// Umbrella header for the angled-2-complex toolkit.
#pragma once

#include "a2c/angle_solver.hpp"
#include "a2c/builders.hpp"
#include "a2c/collapse.hpp"
#include "a2c/complex.hpp"
#include "a2c/curvature.hpp"
#include "a2c/format.hpp"
#include "a2c/fuzz.hpp"
#include "a2c/homotopy.hpp"
#include "a2c/link.hpp"
#include "a2c/rational.hpp"
#include "a2c/realize.hpp"
#include "a2c/simplex.hpp"
#include "a2c/smith.hpp"
#include "a2c/svg.hpp"
#include "a2c/trace.hpp"
#include "a2c/weight_test.hpp"
