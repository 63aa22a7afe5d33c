#pragma once

#include <qtshuffle/combinat/slope.hpp>
#include <qtshuffle/combinat/paths.hpp>
#include <qtshuffle/combinat/stats.hpp>
#include <qtshuffle/combinat/charfun.hpp>
