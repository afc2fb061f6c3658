#pragma once

#include "loev/distance.hpp"
#include "loev/errors.hpp"
#include "loev/ext_real.hpp"
#include "loev/gdelta.hpp"
#include "loev/numfmt.hpp"
#include "loev/orbit.hpp"
#include "loev/premetric.hpp"
#include "loev/principles.hpp"
#include "loev/runner.hpp"
#include "loev/scenario.hpp"
#include "loev/seeds.hpp"
#include "loev/semicomplete.hpp"
