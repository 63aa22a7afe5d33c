#pragma once

#include <qtshuffle/coeffring/coefrat.hpp>
#include <qtshuffle/coeffring/fast_scalar.hpp>
#include <qtshuffle/coeffring/laurent.hpp>
