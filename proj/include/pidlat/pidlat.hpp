#pragma once

// Umbrella header for the pidlat library.

#include "pidlat/alternate.hpp"
#include "pidlat/atoms.hpp"
#include "pidlat/collections.hpp"
#include "pidlat/decomposition.hpp"
#include "pidlat/distribution.hpp"
#include "pidlat/errors.hpp"
#include "pidlat/information.hpp"
#include "pidlat/lattice.hpp"
#include "pidlat/parthood.hpp"
#include "pidlat/redundancy.hpp"
#include "pidlat/serialize.hpp"
#include "pidlat/statements.hpp"
