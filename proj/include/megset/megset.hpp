#pragma once

#include "common.hpp"
#include "graph.hpp"
#include "monitoring.hpp"
#include "solve.hpp"
#include "setcover.hpp"
#include "reduction.hpp"
#include "gen.hpp"
