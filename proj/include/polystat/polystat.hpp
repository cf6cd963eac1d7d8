#pragma once

#include "polystat/convex_hull.hpp"
#include "polystat/duality.hpp"
#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/fixtures.hpp"
#include "polystat/generator.hpp"
#include "polystat/geometry.hpp"
#include "polystat/io.hpp"
#include "polystat/monostatic.hpp"
#include "polystat/polyhedron.hpp"
#include "polystat/rational.hpp"
#include "polystat/sampling.hpp"
#include "polystat/tipping.hpp"
#include "polystat/verify.hpp"
#include "polystat/vertex_links.hpp"
