#pragma once

#include "lpa/closure.hpp"
#include "lpa/cycles.hpp"
#include "lpa/error.hpp"
#include "lpa/generators.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal_lattice.hpp"
#include "lpa/io/dot.hpp"
#include "lpa/io/graph_parser.hpp"
#include "lpa/io/literals.hpp"
#include "lpa/io/table.hpp"
#include "lpa/laurent_ideal.hpp"
#include "lpa/laurent_poly.hpp"
#include "lpa/pair_lattice.hpp"
#include "lpa/ring.hpp"
