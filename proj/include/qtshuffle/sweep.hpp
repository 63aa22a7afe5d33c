#pragma once

#include <qtshuffle/sweep/coloring_dp.hpp>
#include <qtshuffle/sweep/events.hpp>
