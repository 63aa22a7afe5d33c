#pragma once

#include <qtshuffle/actions/compositional.hpp>
#include <qtshuffle/actions/mediant.hpp>
#include <qtshuffle/actions/tower.hpp>
