#pragma once

#include "mpham/errors.hpp"
#include "mpham/rational.hpp"
#include "mpham/vertex_set.hpp"
#include "mpham/partition.hpp"
#include "mpham/graph.hpp"
#include "mpham/hamiltonicity.hpp"
#include "mpham/constructions.hpp"
#include "mpham/matching.hpp"
#include "mpham/expansion.hpp"
#include "mpham/extremal.hpp"
#include "mpham/io.hpp"
#include "mpham/sweep.hpp"
