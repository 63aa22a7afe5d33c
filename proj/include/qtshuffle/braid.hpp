#pragma once

#include <qtshuffle/braid/braid_word.hpp>
#include <qtshuffle/braid/coloring.hpp>
#include <qtshuffle/braid/special.hpp>
#include <qtshuffle/braid/trains.hpp>
