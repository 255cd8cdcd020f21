#pragma once

#include "sharphy/common.hpp"
#include "sharphy/exponents.hpp"
#include "sharphy/quadrature.hpp"
#include "sharphy/specfun.hpp"
#include "sharphy/grid.hpp"
#include "sharphy/euclidean.hpp"
#include "sharphy/weyl.hpp"
#include "sharphy/heisenberg.hpp"
#include "sharphy/torus.hpp"
#include "sharphy/su2.hpp"
