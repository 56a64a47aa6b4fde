#pragma once

#include "tcliques/clique.hpp"
#include "tcliques/enumerator.hpp"
#include "tcliques/initializer.hpp"
#include "tcliques/oracle.hpp"
#include "tcliques/sweep.hpp"
#include "tcliques/temporal_graph.hpp"
