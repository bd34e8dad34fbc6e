#pragma once

// Umbrella header.

#include "bigint.hpp"
#include "canonical.hpp"
#include "combinatorics.hpp"
#include "cone.hpp"
#include "hilbert.hpp"
#include "intersect.hpp"
#include "linalg.hpp"
#include "polymatroid.hpp"
#include "vectors.hpp"
