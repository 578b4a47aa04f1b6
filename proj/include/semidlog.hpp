#pragma once

#include "semidlog/core.hpp"
#include "semidlog/cycle.hpp"
#include "semidlog/dlp.hpp"
#include "semidlog/element_spec.hpp"
#include "semidlog/instances.hpp"
#include "semidlog/json_io.hpp"
#include "semidlog/number_theory.hpp"
#include "semidlog/random.hpp"
