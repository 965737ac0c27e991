#pragma once

#include "lpdec/bivariate.hpp"
#include "lpdec/channels.hpp"
#include "lpdec/decoder.hpp"
#include "lpdec/field.hpp"
#include "lpdec/grs.hpp"
#include "lpdec/linalg.hpp"
#include "lpdec/lp.hpp"
#include "lpdec/optimize.hpp"
#include "lpdec/planner.hpp"
#include "lpdec/poly.hpp"
#include "lpdec/rng.hpp"
#include "lpdec/serialize.hpp"
#include "lpdec/stats.hpp"
#include "lpdec/theta.hpp"
#include "lpdec/weights.hpp"
