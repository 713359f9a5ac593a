#pragma once

#include "error.hpp"
#include "perm.hpp"
#include "gf.hpp"
#include "action.hpp"
#include "hecke.hpp"
#include "embedding.hpp"
#include "topology.hpp"
#include "families.hpp"
#include "report_json.hpp"
#include "census.hpp"
