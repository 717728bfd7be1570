// Umbrella header.
#pragma once

#include "latkit/builders.hpp"
#include "latkit/congruence.hpp"
#include "latkit/covers.hpp"
#include "latkit/elem_set.hpp"
#include "latkit/enumerate.hpp"
#include "latkit/errors.hpp"
#include "latkit/identities.hpp"
#include "latkit/io.hpp"
#include "latkit/kd.hpp"
#include "latkit/lattice.hpp"
#include "latkit/refute.hpp"
#include "latkit/seeds.hpp"
#include "latkit/terms.hpp"
#include "latkit/verify.hpp"
