#pragma once

// Umbrella header for the whole library.

#include "ortho/constructions.hpp"
#include "ortho/errors.hpp"
#include "ortho/explorer.hpp"
#include "ortho/geometry.hpp"
#include "ortho/homology.hpp"
#include "ortho/io.hpp"
#include "ortho/linalg.hpp"
#include "ortho/orthology.hpp"
#include "ortho/rational.hpp"
#include "ortho/sampling.hpp"
#include "ortho/space3d.hpp"
#include "ortho/svg.hpp"
