#pragma once

// Umbrella header: survivable HAP/FSO network planning toolkit.
// Pipeline: cluster ground nodes -> pair HAPs for 1+1 protection ->
// build inter-HAP topology with BER-constrained routing and wavelength
// assignment -> report cost and resource metrics.

#include "hapnet/backup.hpp"
#include "hapnet/ber.hpp"
#include "hapnet/clustering.hpp"
#include "hapnet/design.hpp"
#include "hapnet/geometry.hpp"
#include "hapnet/instance.hpp"
#include "hapnet/io.hpp"
#include "hapnet/matching.hpp"
#include "hapnet/metrics.hpp"
#include "hapnet/params.hpp"
#include "hapnet/pipeline.hpp"
#include "hapnet/rng.hpp"
#include "hapnet/rwa.hpp"
#include "hapnet/scenario.hpp"
#include "hapnet/topology.hpp"
