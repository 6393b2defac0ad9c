#pragma once

#include "tensorwalk/combinatorics.hpp"
#include "tensorwalk/config.hpp"
#include "tensorwalk/curve.hpp"
#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"
#include "tensorwalk/gl_walk.hpp"
#include "tensorwalk/interpolation.hpp"
#include "tensorwalk/kernel.hpp"
#include "tensorwalk/matrix.hpp"
#include "tensorwalk/occupancy.hpp"
#include "tensorwalk/partition.hpp"
#include "tensorwalk/sn_characters.hpp"
#include "tensorwalk/sn_walk.hpp"
