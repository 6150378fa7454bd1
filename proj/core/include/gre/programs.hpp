#pragma once

#include "gre/programs/cc.hpp"
#include "gre/programs/pagerank.hpp"
#include "gre/programs/sssp.hpp"
