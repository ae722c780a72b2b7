#pragma once

// Umbrella header for the qutrit hypergraph-state teleportation library.

#include "qht/matrix.hpp"
#include "qht/state.hpp"
#include "qht/hypergraph.hpp"
#include "qht/channels.hpp"
#include "qht/teleport.hpp"
#include "qht/closed_form.hpp"
#include "qht/verify.hpp"
#include "qht/sweep.hpp"
