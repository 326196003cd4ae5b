#ifndef ORBICHOW_ORBICHOW_HPP
#define ORBICHOW_ORBICHOW_HPP

#include "orbichow/rational.hpp"
#include "orbichow/lattice.hpp"
#include "orbichow/semigroup.hpp"
#include "orbichow/linalg.hpp"
#include "orbichow/deformed_ring.hpp"
#include "orbichow/fibration.hpp"
#include "orbichow/presentation.hpp"
#include "orbichow/isomorphism.hpp"
#include "orbichow/properties.hpp"
#include "orbichow/serialize.hpp"

#endif  // ORBICHOW_ORBICHOW_HPP
