#pragma once

#include "assembly.hpp"
#include "batch.hpp"
#include "config.hpp"
#include "doors.hpp"
#include "error.hpp"
#include "facade.hpp"
#include "grid.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "rng.hpp"
#include "rooms.hpp"
