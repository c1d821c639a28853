#pragma once

// Umbrella header.

#include "tropgeo/curve.hpp"
#include "tropgeo/errors.hpp"
#include "tropgeo/geometry2d.hpp"
#include "tropgeo/initial.hpp"
#include "tropgeo/laurent.hpp"
#include "tropgeo/monomial.hpp"
#include "tropgeo/newton.hpp"
#include "tropgeo/parse.hpp"
#include "tropgeo/puiseux.hpp"
#include "tropgeo/rational.hpp"
#include "tropgeo/subdivision.hpp"
#include "tropgeo/svg.hpp"
#include "tropgeo/tropical.hpp"
#include "tropgeo/valuation.hpp"
#include "tropgeo/verify.hpp"
