#pragma once

#include "core.hpp"
#include "exchange.hpp"
#include "dynkin.hpp"
#include "biagram.hpp"
#include "iso.hpp"
#include "transform.hpp"
#include "catalog.hpp"
#include "derive.hpp"
#include "laurent.hpp"
#include "tsystem.hpp"
#include "tropical.hpp"
#include "wgraph.hpp"
#include "io.hpp"
