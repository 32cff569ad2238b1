#pragma once

#include "satedge/blowup.hpp"
#include "satedge/canon.hpp"
#include "satedge/cliques.hpp"
#include "satedge/config.hpp"
#include "satedge/constructions.hpp"
#include "satedge/error.hpp"
#include "satedge/formulas.hpp"
#include "satedge/graph.hpp"
#include "satedge/io.hpp"
#include "satedge/packing.hpp"
#include "satedge/parallel.hpp"
#include "satedge/rational.hpp"
#include "satedge/saturation.hpp"
#include "satedge/search.hpp"
#include "satedge/vertex_set.hpp"
#include "satedge/verify.hpp"
