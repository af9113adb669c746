#pragma once

#include "circrep/ratio.hpp"
#include "circrep/word.hpp"
#include "circrep/exponent.hpp"
#include "circrep/morphism.hpp"
#include "circrep/cuts.hpp"
#include "circrep/morphism_lemmas.hpp"
#include "circrep/decompose.hpp"
#include "circrep/pansiot.hpp"
#include "circrep/boundary_tables.hpp"
#include "circrep/pansiot_cases.hpp"
#include "circrep/search.hpp"
#include "circrep/base_cases.hpp"
#include "circrep/constructions.hpp"
#include "circrep/lemmas.hpp"
