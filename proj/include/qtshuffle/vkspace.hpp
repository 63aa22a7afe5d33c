#pragma once

#include <qtshuffle/vkspace/velem.hpp>
#include <qtshuffle/vkspace/operators.hpp>
#include <qtshuffle/vkspace/word.hpp>
#include <qtshuffle/vkspace/opset.hpp>
#include <qtshuffle/vkspace/relations.hpp>
