#pragma once

// Umbrella header: relativistic itinerary planning for query workloads.

#include "relspeed/accel.hpp"
#include "relspeed/errors.hpp"
#include "relspeed/inertial.hpp"
#include "relspeed/kinematics.hpp"
#include "relspeed/scenarios.hpp"
#include "relspeed/units.hpp"
#include "relspeed/worldline.hpp"
