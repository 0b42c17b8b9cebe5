#pragma once

#include "colred/algorithm_table.hpp"
#include "colred/bigint.hpp"
#include "colred/collection.hpp"
#include "colred/compiler.hpp"
#include "colred/construction.hpp"
#include "colred/graph.hpp"
#include "colred/io.hpp"
#include "colred/search.hpp"
#include "colred/simulator.hpp"
#include "colred/subset.hpp"
