#pragma once

#include "ideal_forge/builtin.hpp"
#include "ideal_forge/decomposition.hpp"
#include "ideal_forge/element_set.hpp"
#include "ideal_forge/error.hpp"
#include "ideal_forge/expression.hpp"
#include "ideal_forge/ideal.hpp"
#include "ideal_forge/integer_ideals.hpp"
#include "ideal_forge/lattice.hpp"
#include "ideal_forge/malcev.hpp"
#include "ideal_forge/product.hpp"
#include "ideal_forge/ring.hpp"
#include "ideal_forge/ring_spec.hpp"
