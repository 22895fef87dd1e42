/**
 * Umbrella header for the rackhom library.
 */
#ifndef RACKHOM_RACKHOM_HPP
#define RACKHOM_RACKHOM_HPP

#include "rack.hpp"
#include "cubical.hpp"
#include "smith.hpp"
#include "homology.hpp"
#include "diagram.hpp"
#include "io.hpp"
#include "surface.hpp"
#include "chirality.hpp"
#include "fixtures.hpp"

#endif
