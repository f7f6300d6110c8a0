#pragma once

#include "n2closure/closure.hpp"
#include "n2closure/edge_list.hpp"
#include "n2closure/eligibility.hpp"
#include "n2closure/error.hpp"
#include "n2closure/graph.hpp"
#include "n2closure/oracle.hpp"
#include "n2closure/paths.hpp"
#include "n2closure/reconstruct.hpp"
#include "n2closure/serialize.hpp"
