// swr.hpp - umbrella header for the star/wheel Ramsey toolkit.
#pragma once

#include "swr/canonical.hpp"
#include "swr/construct.hpp"
#include "swr/cycle_search.hpp"
#include "swr/detect.hpp"
#include "swr/enumerate.hpp"
#include "swr/graph.hpp"
#include "swr/graph6.hpp"
#include "swr/ramsey.hpp"
#include "swr/structure.hpp"
#include "swr/theorems.hpp"
