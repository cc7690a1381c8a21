#pragma once

#include "catalog.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "games.hpp"
#include "names.hpp"
#include "problems.hpp"
#include "reductions.hpp"
#include "refute.hpp"
#include "spaces.hpp"
