#pragma once

#include <qtshuffle/symfunc/partition.hpp>
#include <qtshuffle/symfunc/plethysm.hpp>
#include <qtshuffle/symfunc/symfunc.hpp>
#include <qtshuffle/symfunc/tables.hpp>
