#pragma once

#include "lenz/census.hpp"
#include "lenz/construction.hpp"
#include "lenz/exactnum.hpp"
#include "lenz/formulas.hpp"
#include "lenz/geometry.hpp"
#include "lenz/hypergraph.hpp"
#include "lenz/serialize.hpp"
#include "lenz/verify.hpp"
