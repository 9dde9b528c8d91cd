#pragma once

#include "cmarr/arrangement.hpp"
#include "cmarr/combinatorics.hpp"
#include "cmarr/configuration.hpp"
#include "cmarr/error.hpp"
#include "cmarr/finite_field.hpp"
#include "cmarr/lattice.hpp"
#include "cmarr/linalg.hpp"
#include "cmarr/maps.hpp"
#include "cmarr/polynomial.hpp"
#include "cmarr/rational.hpp"
#include "cmarr/sampler.hpp"
