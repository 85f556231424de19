#pragma once

#include "mconvex/errors.hpp"
#include "mconvex/graph.hpp"
#include "mconvex/chordal.hpp"
#include "mconvex/oracle.hpp"
#include "mconvex/extension.hpp"
#include "mconvex/poset.hpp"
#include "mconvex/maxflow.hpp"
#include "mconvex/closure.hpp"
#include "mconvex/solver.hpp"
#include "mconvex/gen.hpp"
#include "mconvex/io.hpp"
