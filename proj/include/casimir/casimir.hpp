#pragma once

#include <casimir/boxzero.hpp>
#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/geometry.hpp>
#include <casimir/lattice.hpp>
#include <casimir/plates.hpp>
#include <casimir/richardson.hpp>
#include <casimir/shells.hpp>
#include <casimir/specfun.hpp>
#include <casimir/summation.hpp>
#include <casimir/thermal.hpp>
#include <casimir/units.hpp>
