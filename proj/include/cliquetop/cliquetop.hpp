#pragma once

#include "cliquetop/error.hpp"
#include "cliquetop/simplex.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/adjacency.hpp"
#include "cliquetop/centrality.hpp"
#include "cliquetop/homology.hpp"
#include "cliquetop/filtration.hpp"
#include "cliquetop/io.hpp"
