#pragma once

#include "graphmass/cftp.hpp"
#include "graphmass/dual_chain.hpp"
#include "graphmass/exit_times.hpp"
#include "graphmass/graph.hpp"
#include "graphmass/io.hpp"
#include "graphmass/moment_ode.hpp"
#include "graphmass/moment_table.hpp"
#include "graphmass/parallel.hpp"
#include "graphmass/particle.hpp"
#include "graphmass/partition.hpp"
#include "graphmass/rational.hpp"
#include "graphmass/rng.hpp"
#include "graphmass/sde.hpp"
#include "graphmass/simplex.hpp"
#include "graphmass/spectrum.hpp"
#include "graphmass/stationary.hpp"
#include "graphmass/version.hpp"
