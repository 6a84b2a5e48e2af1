#pragma once

#include "thermolink/capacity.hpp"
#include "thermolink/channel.hpp"
#include "thermolink/config.hpp"
#include "thermolink/constants.hpp"
#include "thermolink/entropy.hpp"
#include "thermolink/error.hpp"
#include "thermolink/scenario.hpp"
#include "thermolink/serialize.hpp"
#include "thermolink/sweep.hpp"
#include "thermolink/thermo.hpp"
